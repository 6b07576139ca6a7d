#pragma once

#include <json.hpp>

#include "scvertex/bracket.hpp"

namespace scv {

struct CheckResult {
  std::string check;
  bool ok = false;
  Scalar central_charge;
  nlohmann::json witness;  // offending term(s) when !ok

  nlohmann::json to_json() const;
};

struct WeightReport {
  bool eigenvector = false;
  Scalar delta;         // conformal weight
  bool primary = false;
  LambdaElement residual;
  nlohmann::json witness;
};

// Sector 0: [L_l L] = (del + 2 lam)L + c/12 lam^3, L_(0) = del on generators.
CheckResult check_virasoro(const Element& L);
// Sector 0, Def 3.2 relations for (L, G).
CheckResult check_n1_pair(const Element& L, const Element& G);
// Sector 0, Def 3.3 relations for (L, J, G+, G-).
CheckResult check_n2_component(const Element& L, const Element& J, const Element& Gp,
                               const Element& Gm);
// Sector 1 super-Virasoro plus mode conditions.
CheckResult check_susy_superconformal(const Element& T, std::uint64_t seed = 0x5c5eed);
// Sector 1, Remark 3.5 relations for (T, J).
CheckResult check_n2_susy_pair(const Element& T, const Element& J);
// Sector 2, Def 3.6 bracket identity plus mode conditions.
CheckResult check_nk2_superconformal(const Element& P);

WeightReport conformal_weight(const Element& T, const Element& v);

struct ConstraintSystem {
  struct Equation {
    Monomial mono;       // canonical monomial the coefficients were compared on
    MixedWord word;
    Scalar residual;     // lhs - rhs as a polynomial in the unknowns
  };
  std::vector<Equation> equations;
  std::vector<ParamId> unknowns;
  ParamId charge_unknown = 0;

  // Substitute a claimed solution; returns the equations that stay nonzero.
  std::vector<Equation> residuals_at(const std::map<ParamId, Scalar>& assignment) const;
};

// Ansatz extractor: T = sum_i m_i * monomial_i with fresh unknowns m_i, the
// super-Virasoro identity subtracted, coefficients compared per monomial/word.
ConstraintSystem ansatz_constraints(const std::vector<Element>& monomials,
                                    const std::vector<std::string>& unknown_names);

// Deterministic pool of random canonical monomials (test/check sampling).
std::vector<Element> random_monomials(const AlgebraSpec* alg, std::size_t count,
                                      std::uint64_t seed, int max_len = 3, int max_del = 2);

}  // namespace scv
