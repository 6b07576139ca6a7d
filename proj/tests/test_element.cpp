#include <doctest.h>

#include <random>

#include "scvertex/bracket.hpp"
#include "scvertex/catalog.hpp"
#include "scvertex/render.hpp"
#include "scvertex/verify.hpp"

using namespace scv;

namespace {

Element mono1(const AlgebraSpec* alg, std::vector<DGen> f) {
  return canonicalize_list(alg, f, Scalar(1));
}

std::vector<Monomial> random_monos(const AlgebraSpec* alg, std::size_t n, std::uint64_t seed,
                                   int max_len = 3, int max_del = 2) {
  std::vector<Monomial> out;
  for (Element& e : random_monomials(alg, n, seed, max_len, max_del))
    out.push_back(e.terms().begin()->first);
  return out;
}

}  // namespace

TEST_CASE("vacuum is the unit") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  Element phi = Element::generator(alg.get(), 0);
  Element vac = Element::vacuum(alg.get());
  CHECK(normal_product(phi, vac) == phi);
  CHECK(normal_product(vac, phi) == phi);
  CHECK(apply_translation(vac, TransOp{false, 1}).is_zero());
  CHECK(apply_translation(vac, TransOp{true, 0}).is_zero());
}

TEST_CASE("reordering a free fermion pair has no correction") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  Element phi = Element::generator(alg.get(), 0);
  Element phibar = Element::generator(alg.get(), 1);
  CHECK(normal_product(phibar, phi) == mono1(alg.get(), {{0, 0, 0}, {1, 0, 0}}));
}

TEST_CASE("odd square with zero self-bracket vanishes") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  Element Dphi = mono1(alg.get(), {{0, 0, 1}});
  CHECK(normal_product(Dphi, Dphi).is_zero());
  // phibar is odd with zero self bracket
  Element phibar = Element::generator(alg.get(), 1);
  CHECK(normal_product(phibar, phibar).is_zero());
}

TEST_CASE("derivations obey the signed Leibniz rule") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  Element p3 = mono1(alg.get(), {{0, 0, 1}, {1, 0, 1}});  // :D phi D phibar:
  Element want = mono1(alg.get(), {{0, 1, 0}, {1, 0, 1}}) - mono1(alg.get(), {{0, 0, 1}, {1, 1, 0}});
  CHECK(apply_translation(p3, TransOp{false, 1}) == want);
  Element pp = mono1(alg.get(), {{0, 0, 0}, {1, 0, 0}});
  Element dpp = mono1(alg.get(), {{0, 1, 0}, {1, 0, 0}}) + mono1(alg.get(), {{0, 0, 0}, {1, 1, 0}});
  CHECK(apply_translation(pp, TransOp{true, 0}) == dpp);
}

TEST_CASE("D squares to del, sector 1") {
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  for (Element& e : random_monomials(alg.get(), 12, 77)) {
    Element dd = apply_translation(apply_translation(e, TransOp{false, 1}), TransOp{false, 1});
    CHECK(dd == apply_translation(e, TransOp{true, 0}));
  }
}

TEST_CASE("D anticommutators, sector 2") {
  auto alg = make_n2_bc_beta_gamma({{"a", false}});
  auto D = [&](int i, const Element& e) { return apply_translation(e, TransOp{false, i}); };
  for (Element& e : random_monomials(alg.get(), 12, 78)) {
    CHECK(D(1, D(1, e)) == apply_translation(e, TransOp{true, 0}));
    CHECK(D(2, D(2, e)) == apply_translation(e, TransOp{true, 0}));
    CHECK((D(1, D(2, e)) + D(2, D(1, e))).is_zero());
  }
}

TEST_CASE("quotient rewrite eliminates D2 on the N=2 system") {
  auto alg = make_n2_bc_beta_gamma({{"a", false}});
  Element Phi = Element::generator(alg.get(), 0);
  Element d2 = apply_translation(Phi, TransOp{false, 2});
  Element d1 = apply_translation(Phi, TransOp{false, 1});
  CHECK(d2 == d1.scaled(Scalar::imaginary_unit()));
}

TEST_CASE("normalization is idempotent") {
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  for (const Element& out : random_monomials(alg.get(), 25, 4321)) {
    for (auto& [m, c] : out.terms())
      CHECK(canonicalize_list(alg.get(), m, Scalar(1)) == Element::from_monomial(alg.get(), m));
  }
}

TEST_CASE("quasi-commutativity holds for canonical products") {
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  auto monos = random_monos(alg.get(), 18, 555, 2, 1);
  for (std::size_t i = 0; i + 1 < monos.size(); i += 2) {
    Element x = Element::from_monomial(alg.get(), monos[i]);
    Element y = Element::from_monomial(alg.get(), monos[i + 1]);
    int px = monomial_parity(alg.get(), monos[i]);
    int py = monomial_parity(alg.get(), monos[i + 1]);
    Element lhs = normal_product(x, y);
    Element yx = normal_product(y, x);
    if ((px & py) != 0) yx = -yx;
    Element rhs = yx + qc_integral(alg.get(), bracket(x, y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quasi-associativity holds for canonical products") {
  auto alg = make_susy_charged_free_fermion({{"a", false}, {"b", true}});
  auto monos = random_monos(alg.get(), 18, 777, 2, 1);
  for (std::size_t i = 0; i + 2 < monos.size(); i += 3) {
    Element x = Element::from_monomial(alg.get(), monos[i]);
    Element y = Element::from_monomial(alg.get(), monos[i + 1]);
    Element z = Element::from_monomial(alg.get(), monos[i + 2]);
    int px = monomial_parity(alg.get(), monos[i]);
    int py = monomial_parity(alg.get(), monos[i + 1]);
    Element lhs = normal_product(normal_product(x, y), z) - normal_product(x, normal_product(y, z));
    Element rhs = qa_int_term(alg.get(), x, bracket(y, z));
    Element t2 = qa_int_term(alg.get(), y, bracket(x, z));
    rhs += ((px & py) != 0) ? -t2 : t2;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("element rendering and json round trip") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  Element p1 = mono1(alg.get(), {{0, 1, 0}, {1, 0, 0}});
  CHECK(element_text(p1) == ":d(phi_a) phibar_a:");
  Element T = p1.scaled(Scalar::param("t_a") + Scalar(1));
  CHECK(element_text(T) == "(1 + t_a)*:d(phi_a) phibar_a:");
  CHECK(element_from_json(alg.get(), element_json(T)) == T);
  CHECK(element_text(Element::zero()) == "0");
}
