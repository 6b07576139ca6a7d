#include "scvertex/reduce.hpp"

namespace scv {

namespace {

struct PairRole {
  std::size_t index;
  bool is_dual;
};

PairRole find_role(const AlgebraSpec* alg, std::uint32_t rank) {
  auto& ps = alg->pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].field == rank) return {i, false};
    if (ps[i].dual == rank) return {i, true};
  }
  throw AlgebraError("generator outside the pair table: " + alg->gen(rank).name);
}

ComponentPair pair_del(const ComponentPair& p) {
  return {apply_translation(p.body, TransOp{true, 0}), apply_translation(p.slope, TransOp{true, 0})};
}

// (A + theta B)(C + theta D) = AC + theta(BC + (-1)^{p} A D), p = parity of
// the left superfield.
ComponentPair pair_product(const ComponentPair& u, int pu, const ComponentPair& v) {
  ComponentPair out;
  out.body = normal_product(u.body, v.body);
  Element t2 = normal_product(u.body, v.slope);
  out.slope = normal_product(u.slope, v.body) + (pu % 2 ? -t2 : t2);
  return out;
}

}  // namespace

ComponentMap make_component_map(const AlgebraSpec* source) {
  if (!source || source->sector() != Sector::N1 || source->kind() != "susy_cff")
    throw SectorError("component map needs a SUSY charged free fermion source");
  ComponentMap map;
  map.source = source;
  std::vector<std::string> copies;
  for (auto& p : source->pairs()) copies.push_back(p.base);
  map.target = make_bc_beta_gamma(copies);
  for (auto& p : map.target->pairs())
    map.blocks.push_back(ComponentMap::Block{p.field, p.dual, p.field + 2, p.field + 3});
  return map;
}

namespace {

ComponentPair base_pair_nk1(const ComponentMap& map, std::uint32_t rank) {
  const AlgebraSpec* tgt = map.target.get();
  PairRole role = find_role(map.source, rank);
  auto& blk = map.blocks.at(role.index);
  bool base_odd = map.source->pairs()[role.index].base_odd;
  // Even a: phi -> (gamma, c), phibar -> (b, beta); odd a swaps the roles.
  bool gamma_side = (role.is_dual == base_odd);
  ComponentPair out;
  if (gamma_side) {
    out.body = Element::generator(tgt, blk.gamma);
    out.slope = Element::generator(tgt, blk.c);
  } else {
    out.body = Element::generator(tgt, blk.b);
    out.slope = Element::generator(tgt, blk.beta);
  }
  return out;
}

ComponentPair dgen_pair_nk1(const ComponentMap& map, const DGen& g) {
  ComponentPair p = base_pair_nk1(map, g.rank);
  if (g.dmask & 1u) p = ComponentPair{p.slope, apply_translation(p.body, TransOp{true, 0})};
  for (std::uint32_t k = 0; k < g.del; ++k) p = pair_del(p);
  return p;
}

}  // namespace

ComponentPair components_nk1(const Element& v, const ComponentMap& map) {
  const AlgebraSpec* tgt = map.target.get();
  ComponentPair total{Element::zero(), Element::zero()};
  for (auto& [m, c] : v.terms()) {
    ComponentPair acc{Element::vacuum(tgt), Element::zero()};
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      ComponentPair f = dgen_pair_nk1(map, *it);
      acc = pair_product(f, dgen_parity(map.source, *it), acc);
    }
    total = total + acc.scaled(c);
  }
  return total;
}

VarPoly<Element> nonsusy_bracket_via_components(const Element& a, const Element& b,
                                                const ComponentMap& map) {
  LambdaElement br = bracket(a, b);
  VarPoly<Element> out;
  for (auto& [w, e] : br.terms()) {
    if (w.chi != 1) continue;
    MixedWord w2;
    w2.lam = w.lam;
    out.add(w2, components_nk1(e, map).body);
  }
  return out;
}

Nk2Reduction make_nk2_reduction(const AlgebraSpec* source) {
  if (!source || source->sector() != Sector::N2 || source->kind() != "n2_bc_beta_gamma")
    throw SectorError("nk2 reduction needs the N=2 SUSY bc-beta-gamma source");
  Nk2Reduction red;
  red.source = source;
  std::vector<std::pair<std::string, bool>> basis;
  for (auto& p : source->pairs()) basis.emplace_back(p.base, p.base_odd);
  red.target = make_susy_charged_free_fermion(basis);
  return red;
}

namespace {

ComponentPair base_pair_nk2(const Nk2Reduction& red, std::uint32_t rank) {
  const AlgebraSpec* tgt = red.target.get();
  PairRole role = find_role(red.source, rank);
  auto& tp = red.target->pairs().at(role.index);
  std::uint32_t trank = role.is_dual ? tp.dual : tp.field;
  Element phi = Element::generator(tgt, trank);
  // Phi = phi + i theta^2 D phi.
  return ComponentPair{phi, apply_translation(phi, TransOp{false, 1}).scaled(Scalar::imaginary_unit())};
}

ComponentPair pair_d1(const ComponentPair& p) {
  return {apply_translation(p.body, TransOp{false, 1}),
          -apply_translation(p.slope, TransOp{false, 1})};
}

ComponentPair pair_d2(const ComponentPair& p) {
  return {p.slope, apply_translation(p.body, TransOp{true, 0})};
}

ComponentPair dgen_pair_nk2(const Nk2Reduction& red, const DGen& g) {
  ComponentPair p = base_pair_nk2(red, g.rank);
  // Innermost operator first: D2, then D1, then del powers.
  if (g.dmask & 2u) p = pair_d2(p);
  if (g.dmask & 1u) p = pair_d1(p);
  for (std::uint32_t k = 0; k < g.del; ++k) p = pair_del(p);
  return p;
}

}  // namespace

ComponentPair components_nk2(const Element& v, const Nk2Reduction& red) {
  const AlgebraSpec* tgt = red.target.get();
  ComponentPair total{Element::zero(), Element::zero()};
  for (auto& [m, c] : v.terms()) {
    ComponentPair acc{Element::vacuum(tgt), Element::zero()};
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      ComponentPair f = dgen_pair_nk2(red, *it);
      acc = pair_product(f, dgen_parity(red.source, *it), acc);
    }
    total = total + acc.scaled(c);
  }
  return total;
}

namespace {

// lambda-coefficient family of the chi-part of the sector-1 bracket.
std::map<std::uint32_t, Element> ns_bracket(const Element& p, const Element& q) {
  std::map<std::uint32_t, Element> out;
  LambdaElement br = bracket(p, q);
  for (auto& [w, e] : br.terms())
    if (w.chi == 1) out[w.lam] = e;
  return out;
}

}  // namespace

LambdaElement nk2_bracket_via_nk1(const Element& u, const Element& v, const Nk2Reduction& red) {
  ComponentPair pu = components_nk2(u, red);
  ComponentPair pv = components_nk2(v, red);
  Element u_body = pu.body;
  Element d1u = pair_d1(pu).body;
  Element d2u = pair_d2(pu).body;
  Element d1d2u = pair_d1(pair_d2(pu)).body;
  Element v_body = pv.body;

  LambdaElement out;
  struct Part {
    Element left;
    std::uint8_t chi;
    int sign;
  };
  // Eq (4.23): -[D1 D2 u_l v] - chi1 [D2 u_l v] + chi2 [D1 u_l v] - chi1chi2 [u_l v]
  std::vector<Part> parts = {{d1d2u, 0, -1}, {d2u, 1, -1}, {d1u, 2, +1}, {u_body, 3, -1}};
  for (auto& part : parts)
    for (auto& [j, e] : ns_bracket(part.left, v_body)) {
      MixedWord w;
      w.lam = j;
      w.chi = part.chi;
      out.add(w, part.sign < 0 ? -e : e);
    }
  return out;
}

LambdaElement nk2_bracket_direct_body(const Element& u, const Element& v,
                                      const Nk2Reduction& red) {
  LambdaElement br = bracket(u, v);
  LambdaElement out;
  for (auto& [w, e] : br.terms()) out.add(w, components_nk2(e, red).body);
  return out;
}

}  // namespace scv
