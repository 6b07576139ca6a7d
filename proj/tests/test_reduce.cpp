#include <doctest.h>

#include "scvertex/reduce.hpp"
#include "scvertex/render.hpp"
#include "scvertex/verify.hpp"

using namespace scv;

namespace {
struct Fx {
  std::shared_ptr<AlgebraSpec> alg;
  ComponentMap cmap;
  Fx(std::vector<std::pair<std::string, bool>> basis = {{"a", false}})
      : alg(make_susy_charged_free_fermion(basis)), cmap(make_component_map(alg.get())) {}
  Element sgen(std::uint32_t r) const { return Element::generator(alg.get(), r); }
  Element tgen(const std::string& n) const {
    return Element::generator(cmap.target.get(), *cmap.target->rank_of(n));
  }
};
}  // namespace

TEST_CASE("Eq (4.1)/(4.2): generator dictionary and the D rule") {
  Fx f;
  auto [body, slope] = components_nk1(f.sgen(0), f.cmap);
  CHECK(body == f.tgen("gamma_a"));
  CHECK(slope == f.tgen("c_a"));
  // D phi -> (c, del gamma)
  Element Dphi = apply_translation(f.sgen(0), TransOp{false, 1});
  auto [b2, s2] = components_nk1(Dphi, f.cmap);
  CHECK(b2 == f.tgen("c_a"));
  CHECK(s2 == apply_translation(f.tgen("gamma_a"), TransOp{true, 0}));
  // D phibar -> (beta, del b)
  Element Dphibar = apply_translation(f.sgen(1), TransOp{false, 1});
  auto [b3, s3] = components_nk1(Dphibar, f.cmap);
  CHECK(b3 == f.tgen("beta_a"));
  CHECK(s3 == apply_translation(f.tgen("b_a"), TransOp{true, 0}));
}

TEST_CASE("Eqs (4.4)-(4.6): component expansion of the standard vector") {
  Fx f;
  const AlgebraSpec* T = f.cmap.target.get();
  // :D phi D phibar: -> (c beta, del gamma beta - c del b)
  Element p3 = normal_product(apply_translation(f.sgen(0), TransOp{false, 1}),
                              apply_translation(f.sgen(1), TransOp{false, 1}));
  auto [b1, s1] = components_nk1(p3, f.cmap);
  CHECK(b1 == normal_product(f.tgen("c_a"), f.tgen("beta_a")));
  Element want_s1 = normal_product(apply_translation(f.tgen("gamma_a"), TransOp{true, 0}),
                                   f.tgen("beta_a")) -
                    normal_product(f.tgen("c_a"), apply_translation(f.tgen("b_a"), TransOp{true, 0}));
  CHECK(s1 == want_s1);
  // T_st's even part -> (G_st, 2 L_st)
  Element T_st = build_vector(f.alg.get(), "T_st");
  auto [gb, ls] = components_nk1(T_st, f.cmap);
  CHECK(gb == build_vector(T, "G_st"));
  CHECK(ls == build_vector(T, "L_st").scaled(Scalar(2)));
}

TEST_CASE("Remark 4.11: shifted vector reduces to shifted components") {
  Fx f({{"a", false}, {"b", true}});
  const AlgebraSpec* T = f.cmap.target.get();
  Element T_sh = build_vector(f.alg.get(), "T_sh");
  auto [body, slope] = components_nk1(T_sh, f.cmap);
  CHECK(body == build_vector(T, "G_sh"));
  CHECK(slope == build_vector(T, "L_sh").scaled(Scalar(2)));
}

TEST_CASE("Eq (4.22): components of T_sh and J_sh") {
  Fx f({{"a", false}, {"b", true}});
  const AlgebraSpec* T = f.cmap.target.get();
  auto [tb, ts] = components_nk1(build_vector(f.alg.get(), "T_sh"), f.cmap);
  CHECK(tb == build_vector(T, "Gp_sh") + build_vector(T, "Gm_sh"));
  CHECK(ts == build_vector(T, "L_sh").scaled(Scalar(2)));
  auto [jb, js] = components_nk1(build_vector(f.alg.get(), "J_sh"), f.cmap);
  CHECK(jb == build_vector(T, "J_sh"));
  CHECK(js == build_vector(T, "Gm_sh") - build_vector(T, "Gp_sh"));
}

TEST_CASE("component map is a homomorphism on random quadratics") {
  Fx f({{"a", false}, {"b", true}});
  auto pool = random_monomials(f.alg.get(), 16, 0xAB, 2, 1);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    const Element& u = pool[i];
    const Element& v = pool[i + 1];
    int pu = u.parity();
    if (pu < 0) continue;
    ComponentPair cu = components_nk1(u, f.cmap);
    ComponentPair cv = components_nk1(v, f.cmap);
    ComponentPair prod = components_nk1(normal_product(u, v), f.cmap);
    CHECK(prod.body == normal_product(cu.body, cv.body));
    Element t2 = normal_product(cu.body, cv.slope);
    Element want_slope = normal_product(cu.slope, cv.body) + (pu ? -t2 : t2);
    CHECK(prod.slope == want_slope);
  }
}

TEST_CASE("chi-part bracket reduction reproduces Ex 2.6 constants") {
  Fx f;
  Element phi = f.sgen(0), phibar = f.sgen(1);
  Element Dphi = apply_translation(phi, TransOp{false, 1});
  Element Dphibar = apply_translation(phibar, TransOp{false, 1});
  auto constant = [&](const VarPoly<Element>& p) -> Scalar {
    if (p.is_zero()) return Scalar();
    REQUIRE(p.terms().size() == 1);
    auto& [w, e] = *p.terms().begin();
    REQUIRE(w.is_one());
    auto vc = e.vacuum_coefficient();
    REQUIRE(vc.has_value());
    return *vc;
  };
  // [gamma_l beta] = -1 from (phi, D phibar)
  CHECK(constant(nonsusy_bracket_via_components(phi, Dphibar, f.cmap)) == Scalar(-1));
  // [beta_l gamma] = 1 from (D phibar, phi)
  CHECK(constant(nonsusy_bracket_via_components(Dphibar, phi, f.cmap)) == Scalar(1));
  // [b_l c] = 1 from (phibar, D phi)
  CHECK(constant(nonsusy_bracket_via_components(phibar, Dphi, f.cmap)) == Scalar(1));
  // [c_l b] = 1 from (D phi, phibar)
  CHECK(constant(nonsusy_bracket_via_components(Dphi, phibar, f.cmap)) == Scalar(1));
  // [gamma_l b] = 0 from (phi, phibar)
  CHECK(nonsusy_bracket_via_components(phi, phibar, f.cmap).is_zero());
  // and the reduced brackets agree with the direct target-algebra brackets
  std::vector<std::pair<Element, Element>> pairs = {{phi, Dphibar}, {Dphi, phibar}, {Dphi, Dphibar}};
  for (auto& [u, v] : pairs) {
    VarPoly<Element> red = nonsusy_bracket_via_components(u, v, f.cmap);
    Element ub = components_nk1(u, f.cmap).body;
    Element vb = components_nk1(v, f.cmap).body;
    CHECK(red == bracket(ub, vb));
  }
}

TEST_CASE("Remark 4.19: N_K=2 dictionary") {
  auto n2 = make_n2_bc_beta_gamma({{"a", false}});
  Nk2Reduction red = make_nk2_reduction(n2.get());
  const AlgebraSpec* S1 = red.target.get();
  Element phi = Element::generator(S1, 0);
  Element Phi = Element::generator(n2.get(), 0);
  ComponentPair p = components_nk2(Phi, red);
  CHECK(p.body == phi);
  CHECK(p.slope == apply_translation(phi, TransOp{false, 1}).scaled(Scalar::imaginary_unit()));
  // D1 Phi = D1 phi - i theta2 del phi
  ComponentPair dp = components_nk2(apply_translation(Phi, TransOp{false, 1}), red);
  CHECK(dp.body == apply_translation(phi, TransOp{false, 1}));
  CHECK(dp.slope == apply_translation(phi, TransOp{true, 0}).scaled(-Scalar::imaginary_unit()));
}

TEST_CASE("Eq (4.24): P_sh reduces to (-i J_sh, -T_sh)") {
  auto n2 = make_n2_bc_beta_gamma({{"a", false}, {"b", true}});
  Nk2Reduction red = make_nk2_reduction(n2.get());
  Element P = build_vector(n2.get(), "P_sh");
  ComponentPair p = components_nk2(P, red);
  CHECK(p.body == build_vector(red.target.get(), "J_sh").scaled(-Scalar::imaginary_unit()));
  CHECK(p.slope == -build_vector(red.target.get(), "T_sh"));
}

TEST_CASE("Eq (4.23): sector-2 brackets from the N_K=1 reduction") {
  auto n2 = make_n2_bc_beta_gamma({{"a", false}, {"b", true}});
  Nk2Reduction red = make_nk2_reduction(n2.get());
  Element Phi = Element::generator(n2.get(), 0);
  Element Phibar = Element::generator(n2.get(), 1);
  CHECK(nk2_bracket_via_nk1(Phi, Phibar, red) == nk2_bracket_direct_body(Phi, Phibar, red));
  CHECK(nk2_bracket_via_nk1(Phi, Phi, red).is_zero());
  // (P_sh, P_sh) both ways reproduce Prop 4.18's right-hand side
  Element P = build_vector(n2.get(), "P_sh");
  CHECK(nk2_bracket_via_nk1(P, P, red) == nk2_bracket_direct_body(P, P, red));
  // cross-formalism consistency on generator pairs
  for (std::uint32_t a = 0; a < n2->num_generators(); ++a)
    for (std::uint32_t b = 0; b < n2->num_generators(); ++b) {
      Element ga = Element::generator(n2.get(), a);
      Element gb = Element::generator(n2.get(), b);
      CHECK(nk2_bracket_via_nk1(ga, gb, red) == nk2_bracket_direct_body(ga, gb, red));
    }
}

TEST_CASE("D2 as a mode action squares to del (Remark 4.17)") {
  // D^2 = i(G+ - G-)_(0) realized through mode_action on the component algebra
  auto susy = make_susy_charged_free_fermion({{"a", false}});
  ComponentMap cmap = make_component_map(susy.get());
  const AlgebraSpec* T = cmap.target.get();
  Element Gp = build_vector(T, "Gp_sh");
  Element Gm = build_vector(T, "Gm_sh");
  Element diff = Gp - Gm;
  auto D2 = [&](const Element& v) {
    return mode_action(diff, 0, 0, v).scaled(Scalar::imaginary_unit());
  };
  for (std::uint32_t r = 0; r < T->num_generators(); ++r) {
    Element g = Element::generator(T, r);
    CHECK(D2(D2(g)) == apply_translation(g, TransOp{true, 0}));
  }
}
