#pragma once

#include "scvertex/catalog.hpp"

namespace scv {

struct ChargeReport {
  bool eigenvector = false;
  Scalar charge;
  Element image;  // the actual J_(0|1) image (witness when not an eigenvector)
};

// Shifted vectors of a SUSY charged free fermion algebra, built once.
struct BrstContext {
  const AlgebraSpec* alg = nullptr;
  Element T_sh;
  Element J_sh;
  Element d;
};

BrstContext make_brst_context(const AlgebraSpec* alg);

ChargeReport charge_of(const BrstContext& ctx, const Element& v);

// Q = d_(0|1); also checked each call against (T_sh(0|1) - J_sh(0|0))/2.
Element brst_q(const BrstContext& ctx, const Element& v);
Element brst_q_defining(const BrstContext& ctx, const Element& v);
// H = (T_sh - d)_(0|1) = (T_sh(0|1) + J_sh(0|0))/2.
Element homotopy_h(const BrstContext& ctx, const Element& v);

struct QSquaredReport {
  bool all_zero = true;
  std::vector<Element> failures;
};
QSquaredReport check_q_squared(const BrstContext& ctx, const std::vector<Element>& pool);

// Buckets eigenvectors by charge; throws on a non-eigenvector.
std::map<Scalar, std::vector<Element>> charge_decomposition(const BrstContext& ctx,
                                                            const std::vector<Element>& vs);

}  // namespace scv
