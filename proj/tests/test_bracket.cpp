#include <doctest.h>

#include "scvertex/catalog.hpp"
#include "scvertex/render.hpp"
#include "scvertex/verify.hpp"

using namespace scv;

namespace {

// Expected-value helpers mirroring the paper's operator notation. They only
// use apply_translation and raw word insertion, independent of the bracket
// evaluator's internals.
LambdaElement unit_word(const Element& e) {
  LambdaElement p;
  p.add(MixedWord{}, e);
  return p;
}

// (del + lambda) applied to a lambda-polynomial.
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

// (D + chi) applied from the left; valid when no chi is present yet.
LambdaElement Dchi(const LambdaElement& p) {
  LambdaElement out;
  for (auto& [w, e] : p.terms()) {
    REQUIRE(w.chi == 0);
    out.add(w, apply_translation(e, TransOp{false, 1}));
    MixedWord w2 = w;
    w2.chi = 1;
    out.add(w2, e);
  }
  return out;
}

// (del + chi D) applied to a single element.
LambdaElement del_chiD(const Element& e) {
  LambdaElement out;
  out.add(MixedWord{}, apply_translation(e, TransOp{true, 0}));
  MixedWord w;
  w.chi = 1;
  out.add(w, apply_translation(e, TransOp{false, 1}));
  return out;
}

struct EvenFixture {
  std::shared_ptr<AlgebraSpec> alg;
  Element phi, phibar, Dphi, Dphibar, dphi, dphibar;
  Element p1, p2, p3, j1, j2, pp;
  Element vac;

  EvenFixture() {
    alg = make_susy_charged_free_fermion({{"a", false}});
    const AlgebraSpec* A = alg.get();
    phi = Element::generator(A, 0);
    phibar = Element::generator(A, 1);
    Dphi = apply_translation(phi, TransOp{false, 1});
    Dphibar = apply_translation(phibar, TransOp{false, 1});
    dphi = apply_translation(phi, TransOp{true, 0});
    dphibar = apply_translation(phibar, TransOp{true, 0});
    p1 = normal_product(dphi, phibar);
    p2 = normal_product(phi, dphibar);
    p3 = normal_product(Dphi, Dphibar);
    j1 = normal_product(Dphi, phibar);
    j2 = normal_product(phi, Dphibar);
    pp = normal_product(phi, phibar);
    vac = Element::vacuum(A);
  }
};

MixedWord w_lam(std::uint32_t n, bool chi = false) {
  MixedWord w;
  w.lam = n;
  w.chi = chi ? 1 : 0;
  return w;
}

}  // namespace

TEST_CASE("structure constants and vacuum brackets") {
  EvenFixture F;
  LambdaElement b = bracket(F.phi, F.phibar);
  CHECK(b == unit_word(F.vac));
  CHECK(bracket(F.phi, F.phi).is_zero());
  CHECK(bracket(F.phibar, F.phibar).is_zero());
  CHECK(bracket(F.phi, F.vac).is_zero());
  CHECK(bracket(F.vac, F.phi).is_zero());
  // skew of the constant: [phibar_L phi] = 1
  CHECK(bracket(F.phibar, F.phi) == unit_word(F.vac));
}

TEST_CASE("Lemma A.1: brackets for del(phi) phibar") {
  EvenFixture F;
  CHECK(bracket(F.p1, F.phi) == unit_word(F.dphi));
  CHECK(bracket(F.p1, F.phibar) == dl(unit_word(F.phibar)));
  CHECK(bracket(F.p1, F.Dphi) == Dchi(unit_word(F.dphi)));
  CHECK(bracket(F.p1, F.Dphibar) == Dchi(dl(unit_word(F.phibar))));
  CHECK(bracket(F.p1, F.dphi) == dl(unit_word(F.dphi)));
  CHECK(bracket(F.p1, F.dphibar) == dl(dl(unit_word(F.phibar))));
}

TEST_CASE("Lemma A.2: brackets for phi del(phibar)") {
  EvenFixture F;
  CHECK(bracket(F.p2, F.phi) == -dl(unit_word(F.phi)));
  CHECK(bracket(F.p2, F.phibar) == -unit_word(F.dphibar));
  CHECK(bracket(F.p2, F.Dphi) == -Dchi(dl(unit_word(F.phi))));
  CHECK(bracket(F.p2, F.Dphibar) == -Dchi(unit_word(F.dphibar)));
  CHECK(bracket(F.p2, F.dphi) == -dl(dl(unit_word(F.phi))));
  CHECK(bracket(F.p2, F.dphibar) == -dl(unit_word(F.dphibar)));
}

TEST_CASE("Lemma A.3: brackets for D(phi) D(phibar)") {
  EvenFixture F;
  CHECK(bracket(F.p3, F.phi) == del_chiD(F.phi));
  CHECK(bracket(F.p3, F.phibar) == del_chiD(F.phibar));
  CHECK(bracket(F.p3, F.Dphi) == dl(unit_word(F.Dphi)));
  CHECK(bracket(F.p3, F.Dphibar) == dl(unit_word(F.Dphibar)));
  CHECK(bracket(F.p3, F.dphi) == dl(del_chiD(F.phi)));
  CHECK(bracket(F.p3, F.dphibar) == dl(del_chiD(F.phibar)));
}

TEST_CASE("Lemma A.4: brackets for D(phi) phibar and phi D(phibar)") {
  EvenFixture F;
  CHECK(bracket(F.j1, F.phi) == -unit_word(F.Dphi));
  CHECK(bracket(F.j1, F.phibar) == -Dchi(unit_word(F.phibar)));
  CHECK(bracket(F.j1, F.Dphi) == del_chiD(F.phi));
  CHECK(bracket(F.j1, F.Dphibar) == dl(unit_word(F.phibar)));
  CHECK(bracket(F.j2, F.phi) == Dchi(unit_word(F.phi)));
  CHECK(bracket(F.j2, F.phibar) == unit_word(F.Dphibar));
  CHECK(bracket(F.j2, F.Dphi) == -dl(unit_word(F.phi)));
  CHECK(bracket(F.j2, F.Dphibar) == -del_chiD(F.phibar));
}

TEST_CASE("Lemma 4.4: the nine quadratic brackets") {
  EvenFixture F;
  auto D3 = apply_translation(F.p3, TransOp{false, 1});
  auto D1 = apply_translation(F.p1, TransOp{false, 1});
  auto D2 = apply_translation(F.p2, TransOp{false, 1});
  Scalar half = Scalar::rational(1, 2);

  LambdaElement b11;
  b11.add(MixedWord{}, apply_translation(F.p1, TransOp{true, 0}));
  b11.add(w_lam(1), F.p1.scaled(Scalar(2)));
  CHECK(bracket(F.p1, F.p1) == b11);

  LambdaElement b12;
  b12.add(MixedWord{}, apply_translation(F.p2, TransOp{true, 0}));
  b12.add(w_lam(1), F.p2.scaled(Scalar(2)));
  b12.add(w_lam(2), F.pp);
  CHECK(bracket(F.p1, F.p2) == b12);

  LambdaElement b13;  // Eq (4.8)
  b13.add(MixedWord{}, apply_translation(F.p3, TransOp{true, 0}));
  b13.add(w_lam(1), F.p3);
  b13.add(w_lam(0, true), D3);
  b13.add(w_lam(2, true), F.vac.scaled(half));
  b13.add(w_lam(1, true), -F.j1);
  CHECK(bracket(F.p1, F.p3) == b13);

  LambdaElement b21;
  b21.add(MixedWord{}, -apply_translation(F.p1, TransOp{true, 0}));
  b21.add(w_lam(1), F.p1.scaled(Scalar(-2)));
  b21.add(w_lam(2), -F.pp);
  CHECK(bracket(F.p2, F.p1) == b21);

  LambdaElement b22;
  b22.add(MixedWord{}, -apply_translation(F.p2, TransOp{true, 0}));
  b22.add(w_lam(1), F.p2.scaled(Scalar(-2)));
  CHECK(bracket(F.p2, F.p2) == b22);

  LambdaElement b23;
  b23.add(MixedWord{}, -apply_translation(F.p3, TransOp{true, 0}));
  b23.add(w_lam(1), -F.p3);
  b23.add(w_lam(0, true), -D3);
  b23.add(w_lam(2, true), F.vac.scaled(half));
  b23.add(w_lam(1, true), -F.j2);
  CHECK(bracket(F.p2, F.p3) == b23);

  LambdaElement b31;
  b31.add(MixedWord{}, apply_translation(F.p1, TransOp{true, 0}));
  b31.add(w_lam(1), F.p1);
  b31.add(w_lam(0, true), D1);
  b31.add(w_lam(2, true), F.vac.scaled(half));
  b31.add(w_lam(1, true), F.j1);
  CHECK(bracket(F.p3, F.p1) == b31);

  LambdaElement b32;
  b32.add(MixedWord{}, apply_translation(F.p2, TransOp{true, 0}));
  b32.add(w_lam(1), F.p2);
  b32.add(w_lam(0, true), D2);
  b32.add(w_lam(2, true), F.vac.scaled(half));
  b32.add(w_lam(1, true), F.j2);
  CHECK(bracket(F.p3, F.p2) == b32);

  LambdaElement b33;  // Eq (4.9)
  b33.add(MixedWord{}, apply_translation(F.p3, TransOp{true, 0}));
  b33.add(w_lam(1), F.p3.scaled(Scalar(2)));
  CHECK(bracket(F.p3, F.p3) == b33);
}

TEST_CASE("Lemma 4.13: current brackets, Eqs (4.12)-(4.21)") {
  EvenFixture F;
  auto Dj1 = apply_translation(F.j1, TransOp{false, 1});
  auto Dj2 = apply_translation(F.j2, TransOp{false, 1});
  Scalar half = Scalar::rational(1, 2);

  LambdaElement e412;
  e412.add(MixedWord{}, apply_translation(F.j1, TransOp{true, 0}));
  e412.add(w_lam(1), F.j1);
  e412.add(w_lam(0, true), Dj1 + F.p3);
  e412.add(w_lam(2), -F.vac.scaled(half));
  CHECK(bracket(F.p1, F.j1) == e412);

  LambdaElement e413;
  e413.add(MixedWord{}, apply_translation(F.j2, TransOp{true, 0}));
  e413.add(w_lam(1), F.j2);
  e413.add(w_lam(0, true), Dj2 - F.p3);
  e413.add(w_lam(1, true), F.pp);
  e413.add(w_lam(2), F.vac.scaled(half));
  CHECK(bracket(F.p1, F.j2) == e413);

  LambdaElement e414;
  e414.add(MixedWord{}, -apply_translation(F.j1, TransOp{true, 0}));
  e414.add(w_lam(1), -F.j1);
  e414.add(w_lam(0, true), -Dj1 - F.p3);
  e414.add(w_lam(1, true), -F.pp);
  e414.add(w_lam(2), -F.vac.scaled(half));
  CHECK(bracket(F.p2, F.j1) == e414);

  LambdaElement e415;
  e415.add(MixedWord{}, -apply_translation(F.j2, TransOp{true, 0}));
  e415.add(w_lam(1), -F.j2);
  e415.add(w_lam(0, true), -Dj2 + F.p3);
  e415.add(w_lam(2), F.vac.scaled(half));
  CHECK(bracket(F.p2, F.j2) == e415);

  LambdaElement e416;
  e416.add(MixedWord{}, apply_translation(F.j1, TransOp{true, 0}));
  e416.add(w_lam(1), F.j1);
  e416.add(w_lam(0, true), -F.p3);
  e416.add(w_lam(2), F.vac.scaled(half));
  CHECK(bracket(F.p3, F.j1) == e416);

  LambdaElement e417;
  e417.add(MixedWord{}, apply_translation(F.j2, TransOp{true, 0}));
  e417.add(w_lam(1), F.j2);
  e417.add(w_lam(0, true), F.p3);
  e417.add(w_lam(2), F.vac.scaled(half));
  CHECK(bracket(F.p3, F.j2) == e417);

  LambdaElement e418;
  e418.add(MixedWord{}, F.p1 + F.p3);
  e418.add(w_lam(1, true), F.vac);
  CHECK(bracket(F.j1, F.j1) == e418);

  LambdaElement e419;
  e419.add(MixedWord{}, F.p2 - F.p3);
  e419.add(w_lam(1), F.pp);
  CHECK(bracket(F.j1, F.j2) == e419);

  LambdaElement e420;
  e420.add(MixedWord{}, -F.p1 - F.p3);
  e420.add(w_lam(1), -F.pp);
  CHECK(bracket(F.j2, F.j1) == e420);

  LambdaElement e421;
  e421.add(MixedWord{}, -F.p2 + F.p3);
  e421.add(w_lam(1, true), -F.vac);
  CHECK(bracket(F.j2, F.j2) == e421);
}

TEST_CASE("odd basis elements: hand-derived oracles") {
  auto alg = make_susy_charged_free_fermion({{"a", true}});
  const AlgebraSpec* A = alg.get();
  Element phi = Element::generator(A, 0);
  Element phibar = Element::generator(A, 1);
  Element dphi = apply_translation(phi, TransOp{true, 0});
  Element dphibar = apply_translation(phibar, TransOp{true, 0});
  Element Dphi = apply_translation(phi, TransOp{false, 1});
  Element Dphibar = apply_translation(phibar, TransOp{false, 1});
  Element p1 = normal_product(dphi, phibar);
  Element p2 = normal_product(phi, dphibar);
  Element p3 = normal_product(Dphi, Dphibar);

  CHECK(bracket(p1, phi) == -unit_word(dphi));
  CHECK(bracket(p2, phi) == dl(unit_word(phi)));
  CHECK(bracket(p3, phi) == del_chiD(phi));
  LambdaElement expect_bar;
  expect_bar.add(MixedWord{}, -dphibar);
  expect_bar.add(w_lam(1), -phibar);
  CHECK(bracket(p1, phibar) == expect_bar);
  CHECK(bracket(p2, phibar) == unit_word(dphibar));
  CHECK(bracket(p3, phibar) == del_chiD(phibar));
}

TEST_CASE("skew-symmetry on random pairs, all sectors") {
  std::vector<std::shared_ptr<AlgebraSpec>> algs = {
      make_bc_beta_gamma({""}),
      make_susy_charged_free_fermion({{"a", false}, {"b", true}}),
      make_n2_bc_beta_gamma({{"a", false}, {"b", true}}),
  };
  std::uint64_t seed = 31337;
  for (auto& alg : algs) {
    auto pool = random_monomials(alg.get(), 14, seed++, 2, 1);
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2)
      CHECK(check_skew(pool[i], pool[i + 1]));
  }
}

TEST_CASE("Jacobi identity on random triples, all sectors") {
  std::vector<std::shared_ptr<AlgebraSpec>> algs = {
      make_bc_beta_gamma({""}),
      make_susy_charged_free_fermion({{"a", false}, {"b", true}}),
      make_n2_bc_beta_gamma({{"a", false}}),
  };
  std::uint64_t seed = 424242;
  for (auto& alg : algs) {
    auto pool = random_monomials(alg.get(), 12, seed++, 2, 1);
    for (std::size_t i = 0; i + 2 < pool.size(); i += 3)
      CHECK(check_jacobi(pool[i], pool[i + 1], pool[i + 2]));
  }
}

TEST_CASE("mode extraction") {
  EvenFixture F;
  // T_st = p1 + p3; T_st_(0|1) acts as D on generators.
  Element T = F.p1 + F.p3;
  CHECK(mode_action(T, 0, 1, F.phi) == F.Dphi);
  CHECK(mode_action(T, 0, 0, F.phi) == F.dphi.scaled(Scalar(2)));
  CHECK(mode_action(T, 5, 0, F.vac).is_zero());
  // locality surrogate: brackets stay polynomial (finite degree)
  LambdaElement b = bracket(T, T);
  for (auto& [w, e] : b.terms()) CHECK(w.lam <= 3);
}
