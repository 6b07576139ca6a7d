#include "scvertex/brst.hpp"

#include "scvertex/render.hpp"

namespace scv {

BrstContext make_brst_context(const AlgebraSpec* alg) {
  if (!alg || alg->sector() != Sector::N1 || alg->kind() != "susy_cff")
    throw SectorError("BRST operators live on the SUSY charged free fermion algebra");
  BrstContext ctx;
  ctx.alg = alg;
  ctx.T_sh = build_vector(alg, "T_sh");
  ctx.J_sh = build_vector(alg, "J_sh");
  ctx.d = build_vector(alg, "d");
  return ctx;
}

ChargeReport charge_of(const BrstContext& ctx, const Element& v) {
  ChargeReport rep;
  rep.image = mode_action(ctx.J_sh, 0, 1, v);
  if (v.is_zero()) {
    rep.eigenvector = true;
    return rep;
  }
  if (rep.image.is_zero()) {
    rep.eigenvector = true;  // charge 0
    return rep;
  }
  // image = charge * v, exactly.
  for (auto& [m, cv] : v.terms()) {
    if (!cv.is_constant() || cv.is_zero()) continue;
    Scalar q = rep.image.coeff(m).times(GaussRat(1) / cv.constant_value());
    if (rep.image == v.scaled(q)) {
      rep.eigenvector = true;
      rep.charge = q;
      return rep;
    }
    break;
  }
  // General exact proportionality via cross-multiplication.
  auto& [m0, c0] = *v.terms().begin();
  Scalar i0 = rep.image.coeff(m0);
  bool ok = true;
  for (auto& [m, cv] : v.terms())
    if (rep.image.coeff(m) * c0 != i0 * cv) ok = false;
  if (ok) {
    for (auto& [m, ci] : rep.image.terms())
      if (v.coeff(m).is_zero()) ok = false;
  }
  if (ok) {
    if (auto q = i0.ratio_to(c0)) {
      if (rep.image == v.scaled(Scalar(*q))) {
        rep.eigenvector = true;
        rep.charge = Scalar(*q);
      }
    }
  }
  return rep;
}

Element brst_q_defining(const BrstContext& ctx, const Element& v) {
  Element t = mode_action(ctx.T_sh, 0, 1, v);
  Element j = mode_action(ctx.J_sh, 0, 0, v);
  return (t - j).scaled(Scalar::rational(1, 2));
}

Element brst_q(const BrstContext& ctx, const Element& v) {
  Element q = mode_action(ctx.d, 0, 1, v);
  Element q2 = brst_q_defining(ctx, v);
  if (q != q2)
    throw AlgebraError("BRST operator mismatch: d_(0|1) vs (T_(0|1) - J_(0|0))/2 on " +
                       element_text(v));
  return q;
}

Element homotopy_h(const BrstContext& ctx, const Element& v) {
  return mode_action(ctx.T_sh - ctx.d, 0, 1, v);
}

QSquaredReport check_q_squared(const BrstContext& ctx, const std::vector<Element>& pool) {
  QSquaredReport rep;
  for (const Element& v : pool) {
    if (!brst_q(ctx, brst_q(ctx, v)).is_zero()) {
      rep.all_zero = false;
      rep.failures.push_back(v);
    }
  }
  return rep;
}

std::map<Scalar, std::vector<Element>> charge_decomposition(const BrstContext& ctx,
                                                            const std::vector<Element>& vs) {
  std::map<Scalar, std::vector<Element>> buckets;
  for (const Element& v : vs) {
    ChargeReport rep = charge_of(ctx, v);
    if (!rep.eigenvector)
      throw AlgebraError("charge_decomposition: not a charge eigenvector: " + element_text(v));
    buckets[rep.charge].push_back(v);
  }
  return buckets;
}

}  // namespace scv
