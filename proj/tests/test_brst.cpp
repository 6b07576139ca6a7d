#include <doctest.h>

#include "scvertex/brst.hpp"
#include "scvertex/verify.hpp"

using namespace scv;

namespace {
struct Fx {
  std::shared_ptr<AlgebraSpec> alg;
  BrstContext ctx;
  Fx() : alg(make_susy_charged_free_fermion({{"a", false}, {"b", true}})), ctx(make_brst_context(alg.get())) {}
  Element gen(std::uint32_t r) const { return Element::generator(alg.get(), r); }
  Element D(const Element& e) const { return apply_translation(e, TransOp{false, 1}); }
  Element del(const Element& e) const { return apply_translation(e, TransOp{true, 0}); }
};
}  // namespace

TEST_CASE("Definition B.1: charges of the generators") {
  Fx f;
  Scalar ta = Scalar::param("t_a"), tb = Scalar::param("t_b");
  ChargeReport r = charge_of(f.ctx, f.gen(0));
  CHECK(r.eigenvector);
  CHECK(r.charge == ta);
  r = charge_of(f.ctx, f.gen(1));
  CHECK(r.eigenvector);
  CHECK(r.charge == -(ta + Scalar(1)));
  // odd basis element: swapped
  r = charge_of(f.ctx, f.gen(2));
  CHECK(r.eigenvector);
  CHECK(r.charge == -(tb + Scalar(1)));
  r = charge_of(f.ctx, f.gen(3));
  CHECK(r.eigenvector);
  CHECK(r.charge == tb);
  // vacuum has charge 0
  r = charge_of(f.ctx, Element::vacuum(f.alg.get()));
  CHECK(r.eigenvector);
  CHECK(r.charge.is_zero());
}

TEST_CASE("Remark B.5: Q and H on the derivative towers") {
  Fx f;
  for (std::uint32_t rank : {0u, 1u, 2u, 3u}) {
    // tower D^i phi, i = 0..3: phi, D phi, del phi, del D phi
    std::vector<Element> tower{f.gen(rank)};
    for (int i = 1; i <= 3; ++i) tower.push_back(f.D(tower.back()));
    for (int i = 0; i <= 2; ++i) {
      Element q = brst_q(f.ctx, tower[i]);
      Element h = homotopy_h(f.ctx, tower[i]);
      if (i % 2 == 0) {
        CHECK(q == tower[i + 1]);
        CHECK(h.is_zero());
      } else {
        CHECK(q.is_zero());
        CHECK(h == tower[i + 1]);
      }
    }
  }
}

TEST_CASE("Q agrees with its defining form and is t-independent") {
  Fx f;
  auto pool = random_monomials(f.alg.get(), 25, 0xB00); 
  for (const Element& v : pool) {
    Element q = brst_q(f.ctx, v);  // asserts d-route == defining route
    for (auto& p : f.alg->pairs()) CHECK(!q.uses_param(p.shift));
  }
}

TEST_CASE("Proposition B.2: Q squared vanishes") {
  Fx f;
  std::vector<Element> pool;
  for (std::uint32_t r = 0; r < 4; ++r) {
    Element g = Element::generator(f.alg.get(), r);
    pool.push_back(g);
    pool.push_back(f.D(g));
    pool.push_back(f.del(g));
    pool.push_back(f.del(f.D(g)));
  }
  pool.push_back(Element::vacuum(f.alg.get()));
  for (Element& m : random_monomials(f.alg.get(), 50, 0x95EED, 3, 2)) pool.push_back(std::move(m));
  QSquaredReport rep = check_q_squared(f.ctx, pool);
  CHECK(rep.all_zero);
}

TEST_CASE("Propositions B.4/B.6: Q raises charge, H lowers it, buckets") {
  auto alg = make_susy_charged_free_fermion({{"a", false}});
  BrstContext ctx = make_brst_context(alg.get());
  // integer specialization t_a = 1
  std::map<ParamId, Scalar> t1{{param_intern("t_a"), Scalar(1)}};
  Element phi = Element::generator(alg.get(), 0).substitute_params(t1);
  Element phibar = Element::generator(alg.get(), 1);
  BrstContext spec_ctx{alg.get(), ctx.T_sh.substitute_params(t1), ctx.J_sh.substitute_params(t1),
                       ctx.d};
  CHECK(charge_of(spec_ctx, phi).charge == Scalar(1));
  CHECK(charge_of(spec_ctx, phibar).charge == Scalar(-2));
  Element pp = normal_product(phi, phibar);
  ChargeReport pr = charge_of(spec_ctx, pp);
  CHECK(pr.eigenvector);
  auto buckets = charge_decomposition(spec_ctx, {phi, phibar, pp});
  CHECK(buckets[Scalar(1)].size() == 1);
  CHECK(buckets[Scalar(-2)].size() == 1);
  CHECK(buckets[pr.charge].size() >= 1);
  // Q maps charge m to m+1; H maps m to m-1 (on charged, nonzero images)
  for (Element& v : random_monomials(alg.get(), 30, 0xC0FFEE, 2, 1)) {
    Element vs = v.substitute_params(t1);
    ChargeReport cv = charge_of(spec_ctx, vs);
    if (!cv.eigenvector) continue;
    Element qv = brst_q(spec_ctx, vs);
    if (!qv.is_zero()) {
      ChargeReport cq = charge_of(spec_ctx, qv);
      CHECK(cq.eigenvector);
      CHECK(cq.charge == cv.charge + Scalar(1));
    }
    Element hv = homotopy_h(spec_ctx, vs);
    if (!hv.is_zero()) {
      ChargeReport ch = charge_of(spec_ctx, hv);
      CHECK(ch.eigenvector);
      CHECK(ch.charge == cv.charge - Scalar(1));
    }
  }
}
