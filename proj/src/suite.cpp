#include "scvertex/suite.hpp"

#include <functional>
#include <future>

#include "scvertex/brst.hpp"
#include "scvertex/reduce.hpp"
#include "scvertex/render.hpp"
#include "scvertex/verify.hpp"

namespace scv {

namespace {

struct Tally {
  int total = 0;
  int failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      ++failed;
      if (first_failure.empty()) first_failure = what;
    }
  }
  SuiteLine line(const std::string& name) const {
    SuiteLine ln;
    ln.name = name;
    ln.ok = failed == 0;
    ln.detail = failed == 0 ? std::to_string(total) + " identities"
                            : std::to_string(failed) + "/" + std::to_string(total) +
                                  " failed; first: " + first_failure;
    return ln;
  }
};

LambdaElement unit_word(const Element& e) {
  LambdaElement p;
  p.add(MixedWord{}, e);
  return p;
}

LambdaElement dl(const LambdaElement& p) {
  LambdaElement out;
  for (auto& [w, e] : p.terms()) {
    out.add(w, apply_translation(e, TransOp{true, 0}));
    MixedWord w2 = w;
    w2.lam += 1;
    out.add(w2, e);
  }
  return out;
}

LambdaElement Dchi(const LambdaElement& p) {
  LambdaElement out;
  for (auto& [w, e] : p.terms()) {
    out.add(w, apply_translation(e, TransOp{false, 1}));
    MixedWord w2 = w;
    w2.chi = 1;
    out.add(w2, e);
  }
  return out;
}

LambdaElement del_chiD(const Element& e) {
  LambdaElement out;
  out.add(MixedWord{}, apply_translation(e, TransOp{true, 0}));
  MixedWord w;
  w.chi = 1;
  out.add(w, apply_translation(e, TransOp{false, 1}));
  return out;
}

MixedWord w_lam(std::uint32_t n, std::uint8_t chi = 0) {
  MixedWord w;
  w.lam = n;
  w.chi = chi;
  return w;
}

Scalar shifted_charge(const AlgebraSpec* alg) {
  Scalar c;
  for (auto& p : alg->pairs()) c += Scalar(6) * Scalar::param(p.shift) + Scalar(3);
  return c;
}

struct Quadratics {
  std::shared_ptr<AlgebraSpec> alg;
  Element phi, phibar, Dphi, Dphibar, dphi, dphibar, p1, p2, p3, j1, j2, pp, vac;
};

Quadratics even_fixture() {
  Quadratics F;
  F.alg = make_susy_charged_free_fermion({{"a", false}});
  const AlgebraSpec* A = F.alg.get();
  F.phi = Element::generator(A, 0);
  F.phibar = Element::generator(A, 1);
  F.Dphi = apply_translation(F.phi, TransOp{false, 1});
  F.Dphibar = apply_translation(F.phibar, TransOp{false, 1});
  F.dphi = apply_translation(F.phi, TransOp{true, 0});
  F.dphibar = apply_translation(F.phibar, TransOp{true, 0});
  F.p1 = normal_product(F.dphi, F.phibar);
  F.p2 = normal_product(F.phi, F.dphibar);
  F.p3 = normal_product(F.Dphi, F.Dphibar);
  F.j1 = normal_product(F.Dphi, F.phibar);
  F.j2 = normal_product(F.phi, F.Dphibar);
  F.pp = normal_product(F.phi, F.phibar);
  F.vac = Element::vacuum(A);
  return F;
}

}  // namespace

SuiteLine criterion_golden_brackets() {
  Tally t;
  Quadratics F = even_fixture();
  auto del = [](const Element& e) { return apply_translation(e, TransOp{true, 0}); };
  auto D = [](const Element& e) { return apply_translation(e, TransOp{false, 1}); };

  // Lemma A.1 - A.4: brackets of the quadratics against derived generators.
  struct Entry {
    const Element* left;
    const Element* right;
    LambdaElement want;
    const char* tag;
  };
  std::vector<Entry> table = {
      {&F.p1, &F.phi, unit_word(F.dphi), "A.1 phi"},
      {&F.p1, &F.phibar, dl(unit_word(F.phibar)), "A.1 phibar"},
      {&F.p1, &F.Dphi, Dchi(unit_word(F.dphi)), "A.1 Dphi"},
      {&F.p1, &F.Dphibar, Dchi(dl(unit_word(F.phibar))), "A.1 Dphibar"},
      {&F.p1, &F.dphi, dl(unit_word(F.dphi)), "A.1 dphi"},
      {&F.p1, &F.dphibar, dl(dl(unit_word(F.phibar))), "A.1 dphibar"},
      {&F.p2, &F.phi, -dl(unit_word(F.phi)), "A.2 phi"},
      {&F.p2, &F.phibar, -unit_word(F.dphibar), "A.2 phibar"},
      {&F.p2, &F.Dphi, -Dchi(dl(unit_word(F.phi))), "A.2 Dphi"},
      {&F.p2, &F.Dphibar, -Dchi(unit_word(F.dphibar)), "A.2 Dphibar"},
      {&F.p2, &F.dphi, -dl(dl(unit_word(F.phi))), "A.2 dphi"},
      {&F.p2, &F.dphibar, -dl(unit_word(F.dphibar)), "A.2 dphibar"},
      {&F.p3, &F.phi, del_chiD(F.phi), "A.3 phi"},
      {&F.p3, &F.phibar, del_chiD(F.phibar), "A.3 phibar"},
      {&F.p3, &F.Dphi, dl(unit_word(F.Dphi)), "A.3 Dphi"},
      {&F.p3, &F.Dphibar, dl(unit_word(F.Dphibar)), "A.3 Dphibar"},
      {&F.p3, &F.dphi, dl(del_chiD(F.phi)), "A.3 dphi"},
      {&F.p3, &F.dphibar, dl(del_chiD(F.phibar)), "A.3 dphibar"},
      {&F.j1, &F.phi, -unit_word(F.Dphi), "A.4 j1 phi"},
      {&F.j1, &F.phibar, -Dchi(unit_word(F.phibar)), "A.4 j1 phibar"},
      {&F.j1, &F.Dphi, del_chiD(F.phi), "A.4 j1 Dphi"},
      {&F.j1, &F.Dphibar, dl(unit_word(F.phibar)), "A.4 j1 Dphibar"},
      {&F.j2, &F.phi, Dchi(unit_word(F.phi)), "A.4 j2 phi"},
      {&F.j2, &F.phibar, unit_word(F.Dphibar), "A.4 j2 phibar"},
      {&F.j2, &F.Dphi, -dl(unit_word(F.phi)), "A.4 j2 Dphi"},
      {&F.j2, &F.Dphibar, -del_chiD(F.phibar), "A.4 j2 Dphibar"},
  };
  for (auto& e : table) t.expect(bracket(*e.left, *e.right) == e.want, e.tag);

  Scalar half = Scalar::rational(1, 2);
  // Lemma 4.4, printed forms.
  {
    LambdaElement b11;
    b11.add(MixedWord{}, del(F.p1));
    b11.add(w_lam(1), F.p1.scaled(Scalar(2)));
    t.expect(bracket(F.p1, F.p1) == b11, "4.4 [p1 p1]");
    LambdaElement b12;
    b12.add(MixedWord{}, del(F.p2));
    b12.add(w_lam(1), F.p2.scaled(Scalar(2)));
    b12.add(w_lam(2), F.pp);
    t.expect(bracket(F.p1, F.p2) == b12, "4.4 [p1 p2]");
    LambdaElement b13;
    b13.add(MixedWord{}, del(F.p3));
    b13.add(w_lam(1), F.p3);
    b13.add(w_lam(0, 1), D(F.p3));
    b13.add(w_lam(2, 1), F.vac.scaled(half));
    b13.add(w_lam(1, 1), -F.j1);
    t.expect(bracket(F.p1, F.p3) == b13, "Eq (4.8)");
    LambdaElement b21;
    b21.add(MixedWord{}, -del(F.p1));
    b21.add(w_lam(1), F.p1.scaled(Scalar(-2)));
    b21.add(w_lam(2), -F.pp);
    t.expect(bracket(F.p2, F.p1) == b21, "4.4 [p2 p1]");
    LambdaElement b22;
    b22.add(MixedWord{}, -del(F.p2));
    b22.add(w_lam(1), F.p2.scaled(Scalar(-2)));
    t.expect(bracket(F.p2, F.p2) == b22, "4.4 [p2 p2]");
    LambdaElement b23;
    b23.add(MixedWord{}, -del(F.p3));
    b23.add(w_lam(1), -F.p3);
    b23.add(w_lam(0, 1), -D(F.p3));
    b23.add(w_lam(2, 1), F.vac.scaled(half));
    b23.add(w_lam(1, 1), -F.j2);
    t.expect(bracket(F.p2, F.p3) == b23, "4.4 [p2 p3]");
    LambdaElement b31;
    b31.add(MixedWord{}, del(F.p1));
    b31.add(w_lam(1), F.p1);
    b31.add(w_lam(0, 1), D(F.p1));
    b31.add(w_lam(2, 1), F.vac.scaled(half));
    b31.add(w_lam(1, 1), F.j1);
    t.expect(bracket(F.p3, F.p1) == b31, "4.4 [p3 p1]");
    LambdaElement b32;
    b32.add(MixedWord{}, del(F.p2));
    b32.add(w_lam(1), F.p2);
    b32.add(w_lam(0, 1), D(F.p2));
    b32.add(w_lam(2, 1), F.vac.scaled(half));
    b32.add(w_lam(1, 1), F.j2);
    t.expect(bracket(F.p3, F.p2) == b32, "4.4 [p3 p2]");
    LambdaElement b33;
    b33.add(MixedWord{}, del(F.p3));
    b33.add(w_lam(1), F.p3.scaled(Scalar(2)));
    t.expect(bracket(F.p3, F.p3) == b33, "Eq (4.9)");
  }

  // Lemma 4.13, Eqs (4.12)-(4.21).
  {
    LambdaElement e412;
    e412.add(MixedWord{}, del(F.j1));
    e412.add(w_lam(1), F.j1);
    e412.add(w_lam(0, 1), D(F.j1) + F.p3);
    e412.add(w_lam(2), -F.vac.scaled(half));
    t.expect(bracket(F.p1, F.j1) == e412, "Eq (4.12)");
    LambdaElement e413;
    e413.add(MixedWord{}, del(F.j2));
    e413.add(w_lam(1), F.j2);
    e413.add(w_lam(0, 1), D(F.j2) - F.p3);
    e413.add(w_lam(1, 1), F.pp);
    e413.add(w_lam(2), F.vac.scaled(half));
    t.expect(bracket(F.p1, F.j2) == e413, "Eq (4.13)");
    LambdaElement e414;
    e414.add(MixedWord{}, -del(F.j1));
    e414.add(w_lam(1), -F.j1);
    e414.add(w_lam(0, 1), -D(F.j1) - F.p3);
    e414.add(w_lam(1, 1), -F.pp);
    e414.add(w_lam(2), -F.vac.scaled(half));
    t.expect(bracket(F.p2, F.j1) == e414, "Eq (4.14)");
    LambdaElement e415;
    e415.add(MixedWord{}, -del(F.j2));
    e415.add(w_lam(1), -F.j2);
    e415.add(w_lam(0, 1), -D(F.j2) + F.p3);
    e415.add(w_lam(2), F.vac.scaled(half));
    t.expect(bracket(F.p2, F.j2) == e415, "Eq (4.15)");
    LambdaElement e416;
    e416.add(MixedWord{}, del(F.j1));
    e416.add(w_lam(1), F.j1);
    e416.add(w_lam(0, 1), -F.p3);
    e416.add(w_lam(2), F.vac.scaled(half));
    t.expect(bracket(F.p3, F.j1) == e416, "Eq (4.16)");
    LambdaElement e417;
    e417.add(MixedWord{}, del(F.j2));
    e417.add(w_lam(1), F.j2);
    e417.add(w_lam(0, 1), F.p3);
    e417.add(w_lam(2), F.vac.scaled(half));
    t.expect(bracket(F.p3, F.j2) == e417, "Eq (4.17)");
    LambdaElement e418;
    e418.add(MixedWord{}, F.p1 + F.p3);
    e418.add(w_lam(1, 1), F.vac);
    t.expect(bracket(F.j1, F.j1) == e418, "Eq (4.18)");
    LambdaElement e419;
    e419.add(MixedWord{}, F.p2 - F.p3);
    e419.add(w_lam(1), F.pp);
    t.expect(bracket(F.j1, F.j2) == e419, "Eq (4.19)");
    LambdaElement e420;
    e420.add(MixedWord{}, -F.p1 - F.p3);
    e420.add(w_lam(1), -F.pp);
    t.expect(bracket(F.j2, F.j1) == e420, "Eq (4.20)");
    LambdaElement e421;
    e421.add(MixedWord{}, -F.p2 + F.p3);
    e421.add(w_lam(1, 1), -F.vac);
    t.expect(bracket(F.j2, F.j2) == e421, "Eq (4.21)");
  }
  return t.line("criterion 1: golden brackets (Lemmas A.1-A.4, 4.4, 4.13)");
}

SuiteLine criterion_shifted_superconformal() {
  Tally t;
  auto alg = make_susy_charged_free_fermion({{"u", false}, {"v", false}, {"w", true}});
  Element T_sh = build_vector(alg.get(), "T_sh");
  CheckResult res = check_susy_superconformal(T_sh);
  t.expect(res.ok, "check_susy_superconformal(T_sh)");
  t.expect(res.central_charge == shifted_charge(alg.get()), "c_sh = sum(6t+3)");
  CheckResult res0 =
      check_susy_superconformal(T_sh.substitute_params(zero_shift_assignment(alg.get())));
  t.expect(res0.ok, "check_susy_superconformal(T_st)");
  t.expect(res0.central_charge == Scalar(9), "c_st = 3 dim U");
  return t.line("criterion 2: Theorem 4.6 shifted superconformal vector");
}

SuiteLine criterion_conformal_weights() {
  Tally t;
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  Element T_sh = build_vector(A, "T_sh");
  Scalar ta = Scalar::param("t_a"), tb = Scalar::param("t_b");
  Scalar half = Scalar::rational(1, 2);
  struct Want {
    std::uint32_t rank;
    Scalar delta;
  };
  std::vector<Want> wants = {{0, -ta * half},
                             {1, (ta + Scalar(1)) * half},
                             {2, (tb + Scalar(1)) * half},
                             {3, -tb * half}};
  for (auto& w : wants) {
    WeightReport rep = conformal_weight(T_sh, Element::generator(A, w.rank));
    t.expect(rep.eigenvector, "eigenvector " + A->gen(w.rank).name);
    t.expect(rep.primary, "primary " + A->gen(w.rank).name);
    t.expect(rep.delta == w.delta, "weight of " + A->gen(w.rank).name);
  }
  return t.line("criterion 3: Proposition 4.9 conformal weights");
}

SuiteLine criterion_shifted_n2_pair() {
  Tally t;
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  Element T_sh = build_vector(A, "T_sh");
  Element J_sh = build_vector(A, "J_sh");
  // [T_L J] = (2 del + 2 lam + chi D) J
  LambdaElement cov;
  cov.add(MixedWord{}, apply_translation(J_sh, TransOp{true, 0}).scaled(Scalar(2)));
  cov.add(w_lam(1), J_sh.scaled(Scalar(2)));
  cov.add(w_lam(0, 1), apply_translation(J_sh, TransOp{false, 1}));
  t.expect(bracket(T_sh, J_sh) == cov, "[T_sh_L J_sh]");
  // [J_L J] = T + sum (2t+1) lam chi
  LambdaElement want;
  want.add(MixedWord{}, T_sh);
  Scalar coef;
  for (auto& p : A->pairs()) coef += Scalar(2) * Scalar::param(p.shift) + Scalar(1);
  want.add(w_lam(1, 1), Element::vacuum(A).scaled(coef));
  t.expect(bracket(J_sh, J_sh) == want, "[J_sh_L J_sh]");
  CheckResult res = check_n2_susy_pair(T_sh, J_sh);
  t.expect(res.ok && res.central_charge == shifted_charge(A), "check_n2_susy_pair");

  // four-way ghost decomposition, single even basis element
  auto alg1 = make_susy_charged_free_fermion({{"a", false}});
  const AlgebraSpec* A1 = alg1.get();
  Element T_st = build_vector(A1, "T_st"), T_gh = build_vector(A1, "T_ghost");
  Element J_st = build_vector(A1, "J_st"), J_gh = build_vector(A1, "J_ghost");
  Element pp = normal_product(Element::generator(A1, 0), Element::generator(A1, 1));
  Scalar ta = Scalar::param("t_a");
  auto cov1 = [&](const Element& v) {
    LambdaElement out;
    out.add(MixedWord{}, apply_translation(v, TransOp{true, 0}).scaled(Scalar(2)));
    out.add(w_lam(1), v.scaled(Scalar(2)));
    out.add(w_lam(0, 1), apply_translation(v, TransOp{false, 1}));
    return out;
  };
  t.expect(bracket(T_st, J_st) == cov1(J_st), "[T_st_L J_st]");
  LambdaElement tsjg = cov1(J_gh);
  tsjg.add(w_lam(2), Element::vacuum(A1).scaled(ta));
  tsjg.add(w_lam(1, 1), pp.scaled(ta));
  t.expect(bracket(T_st, J_gh) == tsjg, "[T_st_L J_ghost]");
  LambdaElement tgjs;
  tgjs.add(w_lam(2), Element::vacuum(A1).scaled(-ta));
  tgjs.add(w_lam(1, 1), pp.scaled(-ta));
  t.expect(bracket(T_gh, J_st) == tgjs, "[T_ghost_L J_st]");
  t.expect(bracket(T_gh, J_gh).is_zero(), "[T_ghost_L J_ghost] = 0");
  return t.line("criterion 4: Theorem 4.14 shifted N=2 pair");
}

SuiteLine criterion_component_central_charges() {
  Tally t;
  auto bc = make_bc_beta_gamma();
  CheckResult r1 = check_n1_pair(build_vector(bc.get(), "L_st"), build_vector(bc.get(), "G_st"));
  t.expect(r1.ok && r1.central_charge == Scalar(3), "bc-beta-gamma c = 3");
  auto osp = make_charged_free_fermion({{"half", true}, {"one", false}});
  CheckResult r2 = check_n1_pair(build_vector(osp.get(), "L_st"), build_vector(osp.get(), "G_st"));
  t.expect(r2.ok && r2.central_charge == Scalar(-3), "osp(1|2) presentation c = -3");
  auto bc2 = make_bc_beta_gamma({"a", "b"});
  CheckResult r3 = check_n2_component(build_vector(bc2.get(), "L_sh"), build_vector(bc2.get(), "J_sh"),
                                      build_vector(bc2.get(), "Gp_sh"), build_vector(bc2.get(), "Gm_sh"));
  t.expect(r3.ok, "Definition 3.3 relation list for (L_sh, J_sh, G+-_sh)");
  t.expect(r3.central_charge == shifted_charge(bc2.get()), "component c = sum(6t+3)");
  return t.line("criterion 5: Example 4.1 / Remark 4.15 central charges");
}

SuiteLine criterion_nk2_superconformal() {
  Tally t;
  auto alg = make_n2_bc_beta_gamma({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  Element P = build_vector(A, "P_sh");
  CheckResult res = check_nk2_superconformal(P);
  t.expect(res.ok, "check_nk2_superconformal(P_sh)");
  t.expect(res.central_charge == shifted_charge(A), "c_sh = sum(6t+3)");

  // Eq (4.25) and the proof identities (4.27)-(4.33) on a single even pair.
  auto alg1 = make_n2_bc_beta_gamma({{"a", false}});
  const AlgebraSpec* A1 = alg1.get();
  Element Phi = Element::generator(A1, 0);
  Element Phibar = Element::generator(A1, 1);
  auto D1 = [&](const Element& e) { return apply_translation(e, TransOp{false, 1}); };
  auto D2 = [&](const Element& e) { return apply_translation(e, TransOp{false, 2}); };
  auto del = [&](const Element& e) { return apply_translation(e, TransOp{true, 0}); };
  Element vac = Element::vacuum(A1);
  Element a1 = normal_product(D1(Phi), Phibar);
  Element pp = normal_product(Phi, Phibar);
  Element d1pp = D1(pp);
  Scalar I = Scalar::imaginary_unit();

  LambdaElement e425;
  e425.add(word_chi(1), vac.scaled(-I));
  e425.add(word_chi(2), vac);
  t.expect(bracket(Phi, Phibar) == e425, "Eq (4.25)");

  LambdaElement e427;
  e427.add(word_chi(1), D1(Phi).scaled(I));
  e427.add(word_chi(2), -D1(Phi));
  t.expect(bracket(Phi, a1) == e427, "Eq (4.27)");

  auto cov_i = [&](const Element& X, long lam_mult) {
    LambdaElement out;
    out.add(MixedWord{}, del(X).scaled(I * Scalar(2)));
    out.add(w_lam(1), X.scaled(I * Scalar(lam_mult)));
    out.add(word_chi(1), D1(X).scaled(I));
    out.add(word_chi(2), D2(X).scaled(I));
    return out;
  };
  MixedWord c12;
  c12.chi = 3;
  MixedWord lc12 = c12;
  lc12.lam = 1;
  MixedWord lam_c1 = w_lam(1, 1), lam_c2 = w_lam(1, 2);

  LambdaElement e428 = cov_i(D1(Phi), 1);
  e428.add(c12, -D1(Phi));
  t.expect(bracket(a1, D1(Phi)) == e428, "Eq (4.28)");

  LambdaElement e429 = cov_i(Phibar, 1);
  e429.add(c12, Phibar);
  t.expect(bracket(a1, Phibar) == e429, "Eq (4.29)");

  LambdaElement e430 = cov_i(a1, 2);
  e430.add(lc12, -vac);
  t.expect(bracket(a1, a1) == e430, "Eq (4.30)");

  t.expect(bracket(pp, pp).is_zero(), "Eq (4.31)");

  // (4.32)/(4.33) with the i lam^2 sign fixed by the nested integral and the
  // component reduction (the printed signs cancel in the theorem either way).
  LambdaElement e432 = cov_i(d1pp, 2);
  e432.add(lam_c1, pp.scaled(I));
  e432.add(lam_c2, pp);
  e432.add(w_lam(2), vac.scaled(I));
  e432.add(lc12, -vac);
  t.expect(bracket(a1, d1pp) == e432, "Eq (4.32)");

  LambdaElement e433;
  e433.add(lam_c1, -pp.scaled(I));
  e433.add(lam_c2, -pp);
  e433.add(w_lam(2), -vac.scaled(I));
  e433.add(lc12, -vac);
  t.expect(bracket(d1pp, a1) == e433, "Eq (4.33)");

  // Cross-check through the Remark 4.16 reduction, Eq (4.23).
  Nk2Reduction red = make_nk2_reduction(A1);
  t.expect(nk2_bracket_via_nk1(Phi, Phibar, red) == nk2_bracket_direct_body(Phi, Phibar, red),
           "Eq (4.23) on (Phi, Phibar)");
  t.expect(nk2_bracket_via_nk1(a1, d1pp, red) == nk2_bracket_direct_body(a1, d1pp, red),
           "Eq (4.23) on the (4.32) pair");
  Element P1 = build_vector(A1, "P_sh");
  t.expect(nk2_bracket_via_nk1(P1, P1, red) == nk2_bracket_direct_body(P1, P1, red),
           "Eq (4.23) on (P_sh, P_sh)");
  return t.line("criterion 6: Theorem 4.21 / Prop 4.18 N_K=2 superconformal vector");
}

SuiteLine criterion_brst(std::uint64_t seed) {
  Tally t;
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  BrstContext ctx = make_brst_context(A);
  auto D = [&](const Element& e) { return apply_translation(e, TransOp{false, 1}); };

  std::vector<Element> pool;
  for (std::uint32_t r = 0; r < A->num_generators(); ++r) {
    Element g = Element::generator(A, r);
    pool.push_back(g);
    Element cur = g;
    for (int i = 0; i < 3; ++i) {
      cur = D(cur);
      pool.push_back(cur);
    }
  }
  for (Element& m : random_monomials(A, 100, seed, 3, 2)) pool.push_back(std::move(m));
  QSquaredReport q2 = check_q_squared(ctx, pool);
  t.expect(q2.all_zero, "Q^2 = 0 on generators, towers, and 100 random monomials");

  // Def B.1 charge table.
  Scalar ta = Scalar::param("t_a"), tb = Scalar::param("t_b");
  t.expect(charge_of(ctx, Element::generator(A, 0)).charge == ta, "charge(phi_a) = t_a");
  t.expect(charge_of(ctx, Element::generator(A, 1)).charge == -(ta + Scalar(1)),
           "charge(phibar_a) = -(t_a+1)");
  t.expect(charge_of(ctx, Element::generator(A, 2)).charge == -(tb + Scalar(1)),
           "charge(phi_b) = -(t_b+1), odd b");
  t.expect(charge_of(ctx, Element::generator(A, 3)).charge == tb, "charge(phibar_b) = t_b");

  // Q raises the charge by one, H lowers it by one, on charged pools.
  int rose = 0, lowered = 0;
  for (Element& v : random_monomials(A, 40, seed ^ 0x9e3779b9, 2, 1)) {
    ChargeReport cv = charge_of(ctx, v);
    if (!cv.eigenvector) continue;
    Element qv = brst_q(ctx, v);
    if (!qv.is_zero()) {
      ChargeReport cq = charge_of(ctx, qv);
      t.expect(cq.eigenvector && cq.charge == cv.charge + Scalar(1), "Q raises the charge");
      ++rose;
    }
    Element hv = homotopy_h(ctx, v);
    if (!hv.is_zero()) {
      ChargeReport ch = charge_of(ctx, hv);
      t.expect(ch.eigenvector && ch.charge == cv.charge - Scalar(1), "H lowers the charge");
      ++lowered;
    }
  }
  t.expect(rose > 0 && lowered > 0, "charged pool was nonempty");

  // Q is independent of the shift parameters (Remark B.3); brst_q already
  // asserts the defining form agrees with d_(0|1).
  for (Element& v : random_monomials(A, 20, seed ^ 0x1234, 2, 1)) {
    Element q = brst_q(ctx, v);
    bool tfree = true;
    for (auto& p : A->pairs()) tfree = tfree && !q.uses_param(p.shift);
    t.expect(tfree, "Q output carries no t parameters");
  }
  return t.line("criterion 7: Appendix B BRST operator");
}

SuiteLine criterion_axiom_properties(std::uint64_t seed) {
  Tally t;
  std::vector<std::shared_ptr<AlgebraSpec>> algs = {
      make_bc_beta_gamma({""}),
      make_susy_charged_free_fermion({{"a", false}, {"b", true}}),
      make_n2_bc_beta_gamma({{"a", false}}),
  };
  const int tuples = 200;
  for (auto& alg : algs) {
    std::string nm = "sector " + std::to_string(static_cast<int>(alg->sector()));
    auto pool = random_monomials(alg.get(), 2 * tuples, seed + static_cast<int>(alg->sector()), 2, 1);
    for (int k = 0; k + 1 < static_cast<int>(pool.size()); k += 2)
      t.expect(check_skew(pool[k], pool[k + 1]), "skew-symmetry, " + nm);
    auto pool3 = random_monomials(alg.get(), 3 * (tuples / 2),
                                  seed * 31 + static_cast<int>(alg->sector()), 2, 1);
    for (int k = 0; k + 2 < static_cast<int>(pool3.size()); k += 3)
      t.expect(check_jacobi(pool3[k], pool3[k + 1], pool3[k + 2]), "Jacobi, " + nm);
  }
  // Normalization: idempotent, and association-independent in the sense that
  // the two association orders differ by exactly the quasi-associativity
  // correction (and transpositions by the quasi-commutativity integral).
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  const AlgebraSpec* A = alg.get();
  auto monos = random_monomials(A, 200, seed ^ 0xfeed, 2, 1);
  for (auto& e : monos)
    for (auto& [m, c] : e.terms())
      t.expect(canonicalize_list(A, m, Scalar(1)) == Element::from_monomial(A, m),
               "idempotent normalization");
  auto trees = random_monomials(A, 3 * 200, seed ^ 0x7ee, 2, 1);
  for (int k = 0; k + 2 < static_cast<int>(trees.size()); k += 3) {
    const Element &x = trees[k], &y = trees[k + 1], &z = trees[k + 2];
    int px = x.parity(), py = y.parity();
    Element lhs = normal_product(normal_product(x, y), z) - normal_product(x, normal_product(y, z));
    Element rhs = qa_int_term(A, x, bracket(y, z));
    Element t2 = qa_int_term(A, y, bracket(x, z));
    rhs += ((px & py) != 0) ? -t2 : t2;
    t.expect(lhs == rhs, "association order differs by the quasi-associativity correction");
    Element lhs2 = normal_product(x, y);
    Element yx = normal_product(y, x);
    if ((px & py) != 0) yx = -yx;
    t.expect(lhs2 == yx + qc_integral(A, bracket(x, y)),
             "transposition differs by the quasi-commutativity integral");
  }
  return t.line("criterion 8: axiom property suite (sectors 0, 1, 2)");
}

SuiteLine criterion_reduction(std::uint64_t seed) {
  Tally t;
  (void)seed;
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  ComponentMap cm = make_component_map(alg.get());
  const AlgebraSpec* A = alg.get();
  const AlgebraSpec* T = cm.target.get();
  auto tg = [&](const std::string& n) { return Element::generator(T, *T->rank_of(n)); };
  auto del = [](const Element& e) { return apply_translation(e, TransOp{true, 0}); };
  Element phi = Element::generator(A, 0), phibar = Element::generator(A, 1);
  Element Dphi = apply_translation(phi, TransOp{false, 1});
  Element Dphibar = apply_translation(phibar, TransOp{false, 1});

  // Eqs (4.2)/(4.3)
  ComponentPair r = components_nk1(Dphi, cm);
  t.expect(r.body == tg("c_a") && r.slope == del(tg("gamma_a")), "Eq (4.2)");
  r = components_nk1(Dphibar, cm);
  t.expect(r.body == tg("beta_a") && r.slope == del(tg("b_a")), "Eq (4.3)");
  // Eq (4.4)
  r = components_nk1(normal_product(Dphi, Dphibar), cm);
  t.expect(r.body == normal_product(tg("c_a"), tg("beta_a")), "Eq (4.4) body");
  t.expect(r.slope == normal_product(del(tg("gamma_a")), tg("beta_a")) -
                          normal_product(tg("c_a"), del(tg("b_a"))),
           "Eq (4.4) slope");
  // Eq (4.5)
  r = components_nk1(normal_product(del(phi), phibar), cm);
  t.expect(r.body == normal_product(del(tg("gamma_a")), tg("b_a")), "Eq (4.5) body");
  t.expect(r.slope == normal_product(del(tg("c_a")), tg("b_a")) +
                          normal_product(del(tg("gamma_a")), tg("beta_a")),
           "Eq (4.5) slope");
  // Eq (4.6)
  r = components_nk1(build_vector(A, "T_st"), cm);
  t.expect(r.body == build_vector(T, "G_st") && r.slope == build_vector(T, "L_st").scaled(Scalar(2)),
           "Eq (4.6)");
  // Eq (4.7): odd basis element
  auto algo = make_susy_charged_free_fermion({{"o", true}});
  ComponentMap cmo = make_component_map(algo.get());
  const AlgebraSpec* To = cmo.target.get();
  auto tgo = [&](const std::string& n) { return Element::generator(To, *To->rank_of(n)); };
  Element phio = Element::generator(algo.get(), 0), phibaro = Element::generator(algo.get(), 1);
  ComponentPair ro =
      components_nk1(normal_product(phio, apply_translation(phibaro, TransOp{true, 0})), cmo);
  t.expect(ro.body == normal_product(del(tgo("gamma_o")), tgo("b_o")), "Eq (4.7) body");
  t.expect(ro.slope == normal_product(del(tgo("c_o")), tgo("b_o")) +
                           normal_product(del(tgo("gamma_o")), tgo("beta_o")),
           "Eq (4.7) slope");

  // Remark 4.11 and Eq (4.22), mixed basis.
  auto algm = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  ComponentMap cmm = make_component_map(algm.get());
  const AlgebraSpec* Tm = cmm.target.get();
  ComponentPair tm = components_nk1(build_vector(algm.get(), "T_sh"), cmm);
  t.expect(tm.body == build_vector(Tm, "Gp_sh") + build_vector(Tm, "Gm_sh"),
           "Remark 4.11 / Eq (4.22) T body");
  t.expect(tm.slope == build_vector(Tm, "L_sh").scaled(Scalar(2)), "Remark 4.11 T slope");
  ComponentPair jm = components_nk1(build_vector(algm.get(), "J_sh"), cmm);
  t.expect(jm.body == build_vector(Tm, "J_sh"), "Eq (4.22) J body");
  t.expect(jm.slope == build_vector(Tm, "Gm_sh") - build_vector(Tm, "Gp_sh"), "Eq (4.22) J slope");

  // Eq (4.24)
  auto n2 = make_n2_bc_beta_gamma({{"a", false}, {"b", true}});
  Nk2Reduction red = make_nk2_reduction(n2.get());
  ComponentPair pr = components_nk2(build_vector(n2.get(), "P_sh"), red);
  t.expect(pr.body == build_vector(red.target.get(), "J_sh").scaled(-Scalar::imaginary_unit()),
           "Eq (4.24) body = -i J_sh");
  t.expect(pr.slope == -build_vector(red.target.get(), "T_sh"), "Eq (4.24) slope = -T_sh");

  // chi-part bracket reduction: all Ex 2.6 structure constants.
  auto constant = [&](const VarPoly<Element>& p) -> std::optional<Scalar> {
    if (p.terms().size() != 1) return std::nullopt;
    auto& [w, e] = *p.terms().begin();
    if (!w.is_one()) return std::nullopt;
    return e.vacuum_coefficient();
  };
  t.expect(constant(nonsusy_bracket_via_components(phi, Dphibar, cm)) == Scalar(-1),
           "[gamma_l beta] = -1");
  t.expect(constant(nonsusy_bracket_via_components(Dphibar, phi, cm)) == Scalar(1),
           "[beta_l gamma] = 1");
  t.expect(constant(nonsusy_bracket_via_components(phibar, Dphi, cm)) == Scalar(1), "[b_l c] = 1");
  t.expect(constant(nonsusy_bracket_via_components(Dphi, phibar, cm)) == Scalar(1), "[c_l b] = 1");
  t.expect(nonsusy_bracket_via_components(phi, phibar, cm).is_zero(), "[gamma_l b] = 0");
  return t.line("criterion 9: component reduction suite");
}

SuiteLine criterion_ansatz() {
  Tally t;
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  const AlgebraSpec* A = alg.get();
  Element phi = Element::generator(A, 0), phibar = Element::generator(A, 1);
  Element p1 = normal_product(apply_translation(phi, TransOp{true, 0}), phibar);
  Element p2 = normal_product(phi, apply_translation(phibar, TransOp{true, 0}));
  Element p3 = normal_product(apply_translation(phi, TransOp{false, 1}),
                              apply_translation(phibar, TransOp{false, 1}));
  ConstraintSystem sys = ansatz_constraints({p1, p2, p3}, {"m1", "m2", "m3"});
  t.expect(!sys.equations.empty(), "a nonempty constraint system");
  Scalar tt = Scalar::param("t");
  std::map<ParamId, Scalar> sol{{param_intern("m1"), tt + Scalar(1)},
                                {param_intern("m2"), tt},
                                {param_intern("m3"), Scalar(1)},
                                {sys.charge_unknown, Scalar(6) * tt + Scalar(3)}};
  t.expect(sys.residuals_at(sol).empty(), "(t+1, t, 1) with c = 6t+3 has zero residual");
  std::map<ParamId, Scalar> bad{{param_intern("m1"), Scalar(1)},
                                {param_intern("m2"), Scalar(1)},
                                {param_intern("m3"), Scalar(1)}};
  auto left = sys.residuals_at(bad);
  bool lam_bad = false;
  std::string witness;
  for (auto& eq : left)
    if (eq.word.chi == 0 && eq.word.lam == 1 && !eq.residual.uses_param(sys.charge_unknown)) {
      lam_bad = true;
      witness = scalar_text(eq.residual);
    }
  t.expect(lam_bad, "(1,1,1) leaves a lambda-coefficient residual");
  SuiteLine ln = t.line("criterion 10: Ansatz 4.5 constraint extraction");
  if (ln.ok && !witness.empty()) ln.detail += "; (1,1,1) residual witness: " + witness;
  return ln;
}

std::vector<SuiteLine> run_paper_suite(std::uint64_t seed, int jobs) {
  std::vector<std::function<SuiteLine()>> criteria = {
      [] { return criterion_golden_brackets(); },
      [] { return criterion_shifted_superconformal(); },
      [] { return criterion_conformal_weights(); },
      [] { return criterion_shifted_n2_pair(); },
      [] { return criterion_component_central_charges(); },
      [] { return criterion_nk2_superconformal(); },
      [seed] { return criterion_brst(seed); },
      [seed] { return criterion_axiom_properties(seed); },
      [seed] { return criterion_reduction(seed); },
      [] { return criterion_ansatz(); },
  };
  std::vector<SuiteLine> out(criteria.size());
  if (jobs > 1) {
    std::vector<std::future<SuiteLine>> futs;
    for (auto& c : criteria) futs.push_back(std::async(std::launch::async, c));
    for (std::size_t k = 0; k < futs.size(); ++k) out[k] = futs[k].get();
  } else {
    for (std::size_t k = 0; k < criteria.size(); ++k) out[k] = criteria[k]();
  }
  return out;
}

}  // namespace scv
