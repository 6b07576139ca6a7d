#pragma once

#include "scvertex/catalog.hpp"

namespace scv {

// Superfield components over the target algebra: v corresponds to
// body(z) + theta * slope(z).
struct ComponentPair {
  Element body;
  Element slope;

  ComponentPair operator+(const ComponentPair& o) const { return {body + o.body, slope + o.slope}; }
  ComponentPair scaled(const Scalar& s) const { return {body.scaled(s), slope.scaled(s)}; }
};

// N_K=1 -> non-SUSY bc-beta-gamma component dictionary (Remark 4.3 layout:
// even a maps phi_a to (gamma, c); odd a swaps the roles of the pair).
struct ComponentMap {
  const AlgebraSpec* source = nullptr;
  std::shared_ptr<AlgebraSpec> target;
  // per source pair: ranks of (b, c, beta, gamma) in the target
  struct Block {
    std::uint32_t b, c, beta, gamma;
  };
  std::vector<Block> blocks;
};

ComponentMap make_component_map(const AlgebraSpec* source);

ComponentPair components_nk1(const Element& v, const ComponentMap& map);

// The chi-part family of the sector-1 bracket, with coefficients pushed
// through the body map: reproduces the target algebra's lambda brackets.
VarPoly<Element> nonsusy_bracket_via_components(const Element& a, const Element& b,
                                                const ComponentMap& map);

// N_K=2 -> N_K=1 reduction (Remark 4.19 dictionary Phi = phi + i theta^2 D phi).
struct Nk2Reduction {
  const AlgebraSpec* source = nullptr;  // sector 2
  std::shared_ptr<AlgebraSpec> target;  // sector 1 susy_cff
};

Nk2Reduction make_nk2_reduction(const AlgebraSpec* source);

ComponentPair components_nk2(const Element& v, const Nk2Reduction& red);

// Eq (4.23): the sector-2 bracket reassembled from sector-0 brackets of the
// D-derivative images, computed inside the N_K=1 algebra. Coefficients are
// N_K=1 elements (the bodies).
LambdaElement nk2_bracket_via_nk1(const Element& u, const Element& v, const Nk2Reduction& red);

// The direct sector-2 bracket with coefficients pushed through the body map,
// for comparison against nk2_bracket_via_nk1.
LambdaElement nk2_bracket_direct_body(const Element& u, const Element& v, const Nk2Reduction& red);

}  // namespace scv
