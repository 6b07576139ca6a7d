#include <doctest.h>

#include "scvertex/catalog.hpp"
#include "scvertex/render.hpp"
#include "scvertex/verify.hpp"

using namespace scv;

namespace {
Scalar shifted_charge(const AlgebraSpec* alg) {
  Scalar c;
  for (auto& p : alg->pairs()) c += Scalar(6) * Scalar::param(p.shift) + Scalar(3);
  return c;
}
}  // namespace

TEST_CASE("Theorem 4.6: shifted superconformal vector, mixed basis") {
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", false}, {"c", true}});
  const AlgebraSpec* A = alg.get();
  Element T_sh = build_vector(A, "T_sh");
  CheckResult res = check_susy_superconformal(T_sh);
  CHECK(res.ok);
  CHECK(res.central_charge == shifted_charge(A));
  // Def 4.2: t = 0 gives c_st = 3 dim U
  CheckResult res0 = check_susy_superconformal(T_sh.substitute_params(zero_shift_assignment(A)));
  CHECK(res0.ok);
  CHECK(res0.central_charge == Scalar(9));
}

TEST_CASE("a lone generator is not superconformal") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  CheckResult res = check_susy_superconformal(Element::generator(alg.get(), 0));
  CHECK(!res.ok);
  CHECK(!res.witness.is_null());
}

TEST_CASE("Proposition 4.9: conformal weights and primaries") {
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  Element T_sh = build_vector(A, "T_sh");
  Scalar ta = Scalar::param("t_a"), tb = Scalar::param("t_b");
  Scalar half = Scalar::rational(1, 2);

  WeightReport w1 = conformal_weight(T_sh, Element::generator(A, 0));
  CHECK(w1.eigenvector);
  CHECK(w1.primary);
  CHECK(w1.delta == -ta * half);
  WeightReport w2 = conformal_weight(T_sh, Element::generator(A, 1));
  CHECK(w2.primary);
  CHECK(w2.delta == (ta + Scalar(1)) * half);
  // odd basis element: weights swapped
  WeightReport w3 = conformal_weight(T_sh, Element::generator(A, 2));
  CHECK(w3.primary);
  CHECK(w3.delta == (tb + Scalar(1)) * half);
  WeightReport w4 = conformal_weight(T_sh, Element::generator(A, 3));
  CHECK(w4.primary);
  CHECK(w4.delta == -tb * half);
  // t = 0: weights of the standard vector
  Element T_st = build_vector(A, "T_st");
  WeightReport w5 = conformal_weight(T_st, Element::generator(A, 0));
  CHECK(w5.primary);
  CHECK(w5.delta.is_zero());
}

TEST_CASE("Theorem 4.14: the shifted N=2 pair") {
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  Element T_sh = build_vector(A, "T_sh");
  Element J_sh = build_vector(A, "J_sh");
  CheckResult res = check_n2_susy_pair(T_sh, J_sh);
  CHECK(res.ok);
  CHECK(res.central_charge == shifted_charge(A));

  // [J_L J] = T + sum (2t+1) lam chi, exactly (proof of Thm 4.14)
  LambdaElement jj = bracket(J_sh, J_sh);
  LambdaElement want;
  want.add(MixedWord{}, T_sh);
  Scalar coef;
  for (auto& p : A->pairs()) coef += Scalar(2) * Scalar::param(p.shift) + Scalar(1);
  MixedWord lc = word_lambda(1);
  lc.chi = 1;
  want.add(lc, Element::vacuum(A).scaled(coef));
  CHECK(jj == want);
}

TEST_CASE("Theorem 4.14 proof: the four-way ghost decomposition") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  const AlgebraSpec* A = alg.get();
  Element T_st = build_vector(A, "T_st"), T_gh = build_vector(A, "T_ghost");
  Element J_st = build_vector(A, "J_st"), J_gh = build_vector(A, "J_ghost");
  Element phi = Element::generator(A, 0), phibar = Element::generator(A, 1);
  Element pp = normal_product(phi, phibar);
  Scalar t = Scalar::param("t_a");
  auto cov = [&](const Element& v) {
    LambdaElement out;
    out.add(MixedWord{}, apply_translation(v, TransOp{true, 0}).scaled(Scalar(2)));
    out.add(word_lambda(1), v.scaled(Scalar(2)));
    MixedWord chi = word_chi(1);
    out.add(chi, apply_translation(v, TransOp{false, 1}));
    return out;
  };
  MixedWord l2 = word_lambda(2);
  MixedWord lc = word_lambda(1);
  lc.chi = 1;

  CHECK(bracket(T_st, J_st) == cov(J_st));
  LambdaElement tgjst;  // [T_ghost_L J_st] = -t lam^2 - t lam chi (phi phibar)
  tgjst.add(l2, Element::vacuum(A).scaled(-t));
  tgjst.add(lc, pp.scaled(-t));
  CHECK(bracket(T_gh, J_st) == tgjst);
  LambdaElement tstjg = cov(J_gh);  // [T_st_L J_ghost] = cov + t lam^2 + t lam chi pp
  tstjg.add(l2, Element::vacuum(A).scaled(t));
  tstjg.add(lc, pp.scaled(t));
  CHECK(bracket(T_st, J_gh) == tstjg);
  CHECK(bracket(T_gh, J_gh).is_zero());

  // [J_st_L J_st] = T_st + lam chi; [J_st_L J_ghost] = T_ghost + t lam pp + t lam chi;
  // [J_ghost_L J_st] = -t lam pp + t lam chi; [J_ghost_L J_ghost] = 0.
  LambdaElement jsjs;
  jsjs.add(MixedWord{}, T_st);
  jsjs.add(lc, Element::vacuum(A));
  CHECK(bracket(J_st, J_st) == jsjs);
  LambdaElement jsjg;
  jsjg.add(MixedWord{}, T_gh);
  jsjg.add(word_lambda(1), pp.scaled(t));
  jsjg.add(lc, Element::vacuum(A).scaled(t));
  CHECK(bracket(J_st, J_gh) == jsjg);
  LambdaElement jgjs;
  jgjs.add(word_lambda(1), pp.scaled(-t));
  jgjs.add(lc, Element::vacuum(A).scaled(t));
  CHECK(bracket(J_gh, J_st) == jgjs);
  CHECK(bracket(J_gh, J_gh).is_zero());
}

TEST_CASE("Example 4.1: central charges 3 and -3") {
  auto bc = make_bc_beta_gamma();
  CheckResult r1 = check_n1_pair(build_vector(bc.get(), "L_st"), build_vector(bc.get(), "G_st"));
  CHECK(r1.ok);
  CHECK(r1.central_charge == Scalar(3));

  auto osp = make_charged_free_fermion({{"half", true}, {"one", false}});
  CheckResult r2 = check_n1_pair(build_vector(osp.get(), "L_st"), build_vector(osp.get(), "G_st"));
  CHECK(r2.ok);
  CHECK(r2.central_charge == Scalar(-3));

  CheckResult r3 = check_virasoro(build_vector(bc.get(), "L_st"));
  CHECK(r3.ok);
  CHECK(r3.central_charge == Scalar(3));
  // (L, 0) fails [G_l G] = 2L
  CheckResult r4 = check_n1_pair(build_vector(bc.get(), "L_st"), Element::zero());
  CHECK(!r4.ok);
}

TEST_CASE("Remark 4.15: component quadruple satisfies Definition 3.3") {
  auto bc = make_bc_beta_gamma({"a", "b"});
  const AlgebraSpec* A = bc.get();
  CheckResult res = check_n2_component(build_vector(A, "L_sh"), build_vector(A, "J_sh"),
                                       build_vector(A, "Gp_sh"), build_vector(A, "Gm_sh"));
  CHECK(res.ok);
  CHECK(res.central_charge == shifted_charge(A));
  // all-zero degenerate pass
  CheckResult z = check_n2_component(Element::zero(), Element::zero(), Element::zero(),
                                     Element::zero());
  CHECK(z.ok);
  CHECK(z.central_charge.is_zero());
}

TEST_CASE("shifted bc vectors: virasoro with c = 6t+3") {
  auto bc = make_bc_beta_gamma();
  const AlgebraSpec* A = bc.get();
  CheckResult res = check_n1_pair(build_vector(A, "L_sh"), build_vector(A, "G_sh"));
  CHECK(res.ok);
  CHECK(res.central_charge == Scalar(6) * Scalar::param("t_a") + Scalar(3));
}

TEST_CASE("Theorem 4.21 / Prop 4.18: N_K=2 superconformal vector") {
  auto alg = make_n2_bc_beta_gamma({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  Element P = build_vector(A, "P_sh");
  CheckResult res = check_nk2_superconformal(P);
  CHECK(res.ok);
  CHECK(res.central_charge == shifted_charge(A));
  // c = 0 at t_a = t_b = -1/2
  std::map<ParamId, Scalar> m;
  for (auto& p : A->pairs()) m.emplace(p.shift, Scalar::rational(-1, 2));
  CheckResult res0 = check_nk2_superconformal(P.substitute_params(m));
  CHECK(res0.ok);
  CHECK(res0.central_charge.is_zero());
  // the zero vector fails the mode conditions
  CHECK(!check_nk2_superconformal(P.scaled(Scalar(0))).ok);
}

TEST_CASE("Theorem 4.21 proof: Eqs (4.27)-(4.33), one even element") {
  auto alg = make_n2_bc_beta_gamma({{"a", false}});
  const AlgebraSpec* A = alg.get();
  Element Phi = Element::generator(A, 0);
  Element Phibar = Element::generator(A, 1);
  auto D1 = [&](const Element& e) { return apply_translation(e, TransOp{false, 1}); };
  auto D2 = [&](const Element& e) { return apply_translation(e, TransOp{false, 2}); };
  auto del = [&](const Element& e) { return apply_translation(e, TransOp{true, 0}); };
  Element vac = Element::vacuum(A);
  Element a1 = normal_product(D1(Phi), Phibar);   // D1 Phi Phibar
  Element pp = normal_product(Phi, Phibar);
  Scalar I = Scalar::imaginary_unit();

  // (4.27): [Phi_L D1 Phi Phibar] = (i chi1 D1 - chi2 D1) Phi
  LambdaElement e427;
  e427.add(word_chi(1), D1(Phi).scaled(I));
  e427.add(word_chi(2), -D1(Phi));
  CHECK(bracket(Phi, a1) == e427);

  // i(2 del + lam + chi1 D1 + chi2 D2) X + extra
  auto cov_i = [&](const Element& X, long lam_mult) {
    LambdaElement out;
    out.add(MixedWord{}, del(X).scaled(I * Scalar(2)));
    out.add(word_lambda(1), X.scaled(I * Scalar(lam_mult)));
    out.add(word_chi(1), D1(X).scaled(I));
    out.add(word_chi(2), D2(X).scaled(I));
    return out;
  };
  MixedWord c12;
  c12.chi = 3;
  MixedWord lc12 = c12;
  lc12.lam = 1;

  // (4.28): [D1 Phi Phibar_L D1 Phi] = i(2d + lam + chi D) D1 Phi - chi1 chi2 D1 Phi
  LambdaElement e428 = cov_i(D1(Phi), 1);
  e428.add(c12, -D1(Phi));
  CHECK(bracket(a1, D1(Phi)) == e428);

  // (4.29): [D1 Phi Phibar_L Phibar] = i(2d + lam + chi D) Phibar + chi1 chi2 Phibar
  LambdaElement e429 = cov_i(Phibar, 1);
  e429.add(c12, Phibar);
  CHECK(bracket(a1, Phibar) == e429);

  // (4.30): [a1_L a1] = i(2d + 2lam + chi D)(a1) - lam chi1 chi2
  LambdaElement e430 = cov_i(a1, 2);
  e430.add(lc12, -vac);
  CHECK(bracket(a1, a1) == e430);

  // (4.31): [Phi Phibar_L Phi Phibar] = 0
  CHECK(bracket(pp, pp).is_zero());

  // (4.32): [a1_L D1(pp)] = i(2d+2lam+chiD)(D1 pp) + (i lam chi1 + lam chi2) pp + i lam^2 - lam chi1 chi2.
  // The i lam^2 sign here (and its mirror in 4.33) is fixed by the nested Wick
  // integral and confirmed through the component reduction; the two signs
  // cancel in the theorem's total either way.
  Element d1pp = D1(pp);
  LambdaElement e432 = cov_i(d1pp, 2);
  MixedWord lam_c1 = word_lambda(1);
  lam_c1.chi = 1;
  MixedWord lam_c2 = word_lambda(1);
  lam_c2.chi = 2;
  e432.add(lam_c1, pp.scaled(I));
  e432.add(lam_c2, pp);
  e432.add(word_lambda(2), vac.scaled(I));
  e432.add(lc12, -vac);
  CHECK(bracket(a1, d1pp) == e432);

  // (4.33): [D1(pp)_L a1] = -(i lam chi1 + lam chi2) pp - i lam^2 - lam chi1 chi2
  LambdaElement e433;
  e433.add(lam_c1, -pp.scaled(I));
  e433.add(lam_c2, -pp);
  e433.add(word_lambda(2), -vac.scaled(I));
  e433.add(lc12, -vac);
  CHECK(bracket(d1pp, a1) == e433);
  // skew-symmetry ties the two together
  CHECK(check_skew(a1, d1pp));
}

TEST_CASE("Ansatz 4.5: constraint extraction") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  const AlgebraSpec* A = alg.get();
  Element phi = Element::generator(A, 0), phibar = Element::generator(A, 1);
  Element p1 = normal_product(apply_translation(phi, TransOp{true, 0}), phibar);
  Element p2 = normal_product(phi, apply_translation(phibar, TransOp{true, 0}));
  Element p3 = normal_product(apply_translation(phi, TransOp{false, 1}),
                              apply_translation(phibar, TransOp{false, 1}));
  ConstraintSystem sys = ansatz_constraints({p1, p2, p3}, {"m1", "m2", "m3"});
  CHECK(!sys.equations.empty());

  Scalar m1 = Scalar::param("m1"), m2 = Scalar::param("m2"), m3 = Scalar::param("m3");
  // The chi D coefficient of del(phi) phibar gives m1 m3 = m1, the lambda
  // coefficient gives 2 m1^2 - 2 m1 m2 + m1 m3 = 3 m1.
  bool found_chiD = false, found_lam = false;
  Monomial mono_p1 = p1.terms().begin()->first;
  // :D(d(phi)) phibar: appears only in D(p1), so its equation is m1 m3 = m1.
  Monomial mono_Dp1 =
      canonicalize_list(A, {DGen{0, 1, 1}, DGen{1, 0, 0}}, Scalar(1)).terms().begin()->first;
  for (auto& eq : sys.equations) {
    if (eq.word.chi == 1 && eq.word.lam == 0 && eq.mono == mono_Dp1 &&
        eq.residual == m1 * m3 - m1)
      found_chiD = true;
    if (eq.word.chi == 0 && eq.word.lam == 1 && eq.mono == mono_p1 &&
        eq.residual == Scalar(2) * m1 * m1 - Scalar(2) * m1 * m2 + m1 * m3 - Scalar(3) * m1)
      found_lam = true;
  }
  CHECK(found_chiD);
  CHECK(found_lam);

  // (t+1, t, 1) with c = 6t+3 has zero residual
  Scalar t = Scalar::param("t");
  std::map<ParamId, Scalar> sol{{param_intern("m1"), t + Scalar(1)},
                                {param_intern("m2"), t},
                                {param_intern("m3"), Scalar(1)},
                                {sys.charge_unknown, Scalar(6) * t + Scalar(3)}};
  CHECK(sys.residuals_at(sol).empty());

  // (0,0,0) with c = 0 also satisfies the bare bracket identity
  std::map<ParamId, Scalar> zero{{param_intern("m1"), Scalar(0)},
                                 {param_intern("m2"), Scalar(0)},
                                 {param_intern("m3"), Scalar(0)},
                                 {sys.charge_unknown, Scalar(0)}};
  CHECK(sys.residuals_at(zero).empty());

  // (1,1,1) leaves a nonzero lambda-coefficient residual for every c
  std::map<ParamId, Scalar> bad{{param_intern("m1"), Scalar(1)},
                                {param_intern("m2"), Scalar(1)},
                                {param_intern("m3"), Scalar(1)}};
  auto left = sys.residuals_at(bad);
  bool lam_bad = false;
  for (auto& eq : left)
    if (eq.word.chi == 0 && eq.word.lam == 1 && !eq.residual.uses_param(sys.charge_unknown))
      lam_bad = true;
  CHECK(lam_bad);
}
