#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "scvertex/scalar.hpp"
#include "scvertex/words.hpp"

namespace scv {

class AlgebraSpec;

// Generator with a translation word del^del D^dmask applied (D's in index order).
struct DGen {
  std::uint32_t rank = 0;
  std::uint32_t del = 0;
  std::uint8_t dmask = 0;

  auto key() const { return std::tie(rank, del, dmask); }
  bool operator<(const DGen& o) const { return key() < o.key(); }
  bool operator==(const DGen& o) const { return key() == o.key(); }
};

// Right-nested normally ordered product of derived generators; empty = vacuum.
using Monomial = std::vector<DGen>;

class Element {
 public:
  Element() = default;  // zero, algebra-free

  static Element zero() { return Element(); }
  static Element vacuum(const AlgebraSpec* alg);
  static Element generator(const AlgebraSpec* alg, std::uint32_t rank);
  static Element from_monomial(const AlgebraSpec* alg, Monomial m, Scalar c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  const AlgebraSpec* algebra() const { return alg_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  void add(const Monomial& m, const Scalar& c);
  Element operator+(const Element& o) const;
  Element& operator+=(const Element& o);
  Element operator-() const;
  Element operator-(const Element& o) const { return *this + (-o); }
  Element scaled(const Scalar& s) const;
  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  // 0 even, 1 odd, -1 mixed, 0 for zero.
  int parity() const;
  std::pair<Element, Element> split_parity() const;  // (even part, odd part)

  Scalar coeff(const Monomial& m) const;
  // If the element is scalar * vacuum, return the scalar.
  std::optional<Scalar> vacuum_coefficient() const;
  bool uses_param(ParamId id) const;

  Element substitute_params(const std::map<ParamId, Scalar>& assignment) const;

 private:
  const AlgebraSpec* alg_ = nullptr;
  std::map<Monomial, Scalar> terms_;
};

using LambdaElement = VarPoly<Element>;

struct TransOp {
  bool is_del = true;
  int index = 0;  // D index when !is_del
};

int monomial_parity(const AlgebraSpec* alg, const Monomial& m);
int dgen_parity(const AlgebraSpec* alg, const DGen& g);

// Derivations: del (even) and D^i (odd, signed Leibniz rule).
Element apply_translation(const Element& v, TransOp op);

// Canonical normally ordered product with quasi-commutativity and
// quasi-associativity corrections.
Element normal_product(const Element& a, const Element& b);

// Right-fold of a factor list into canonical form: the list is read as the
// right-nested product :f1 (f2 (... fn)):.
Element canonicalize_list(const AlgebraSpec* alg, const std::vector<DGen>& factors,
                          const Scalar& coeff);

// Apply the del/D parts of every word to its coefficient (innermost D first),
// leaving pure bracket-variable words.
LambdaElement collapse_words(const LambdaElement& p);

// Element * word-polynomial interactions with Koszul signs.
LambdaElement lmul_element(const Element& h, const LambdaElement& p);
LambdaElement rmul_element(const LambdaElement& p, const Element& c);

LambdaElement lambda_scaled(const LambdaElement& p, const Scalar& s);

}  // namespace scv
