#include "scvertex/verify.hpp"

#include <random>

#include "scvertex/render.hpp"

namespace scv {

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["status"] = ok ? "ok" : "failed";
  j["central_charge"] = scalar_text(central_charge);
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

namespace {

nlohmann::json diff_witness(const std::string& what, const LambdaElement& diff) {
  nlohmann::json j;
  j["relation"] = what;
  j["difference"] = lambda_text(diff);
  return j;
}

// 2 del v as constant word term.
LambdaElement covariant(const Element& v, const Scalar& two, const Scalar& lam_coeff,
                        bool with_chi_d) {
  const AlgebraSpec* alg = v.algebra();
  LambdaElement out;
  out.add(MixedWord{}, apply_translation(v, TransOp{true, 0}).scaled(two));
  out.add(word_lambda(1), v.scaled(lam_coeff));
  if (with_chi_d && alg) {
    for (int i = 1; i <= odd_var_count(alg->sector()); ++i)
      out.add(word_chi(i), apply_translation(v, TransOp{false, i}));
  }
  return out;
}

// Extract c from diff == (scalar) * word * vacuum; anything else fails.
bool extract_charge(const LambdaElement& diff, const MixedWord& top, long denom_to_c,
                    Scalar* c, nlohmann::json* witness, const std::string& what) {
  Scalar out;
  for (auto& [w, e] : diff.terms()) {
    auto vc = e.vacuum_coefficient();
    if (!(w == top) || !vc) {
      *witness = diff_witness(what, diff);
      return false;
    }
    out = vc->times(GaussRat(denom_to_c));
  }
  *c = out;
  return true;
}

bool expect_zero(const LambdaElement& diff, const std::string& what, nlohmann::json* witness) {
  if (diff.is_zero()) return true;
  *witness = diff_witness(what, diff);
  return false;
}

Element mode_coeff(const LambdaElement& br, std::uint32_t lam, std::uint8_t chi) {
  MixedWord w;
  w.lam = lam;
  w.chi = chi;
  return br.coeff(w);
}

bool is_scalar_multiple(const Element& image, const Element& v, Scalar* ratio) {
  if (image.is_zero()) {
    *ratio = Scalar();
    return true;
  }
  if (v.is_zero()) return false;
  // Match term by term: image = q * v exactly.
  auto& vt = v.terms();
  auto& it = image.terms();
  // Find a reference quotient from some monomial of v present in image.
  for (auto& [m, cv] : vt) {
    auto found = it.find(m);
    if (found == it.end()) continue;
    if (auto q = found->second.ratio_to(cv)) {
      if (image == v.scaled(Scalar(*q))) {
        *ratio = Scalar(*q);
        return true;
      }
    }
  }
  // Polynomial eigenvalues (e.g. -(t+1)) need a polynomial quotient attempt:
  // try image_coeff / v_coeff when the v coefficient is a nonzero constant.
  for (auto& [m, cv] : vt) {
    if (!cv.is_constant() || cv.is_zero()) continue;
    auto found = it.find(m);
    if (found == it.end()) break;
    Scalar q = found->second.times(GaussRat(1) / cv.constant_value());
    if (image == v.scaled(q)) {
      *ratio = q;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Element> random_monomials(const AlgebraSpec* alg, std::size_t count,
                                      std::uint64_t seed, int max_len, int max_del) {
  std::mt19937_64 rng(seed);
  std::vector<Element> out;
  std::size_t guard = 0;
  while (out.size() < count && guard++ < count * 40) {
    int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
    std::vector<DGen> factors;
    for (int k = 0; k < len; ++k) {
      DGen g;
      g.rank = static_cast<std::uint32_t>(rng() % alg->num_generators());
      g.del = static_cast<std::uint32_t>(rng() % static_cast<unsigned>(max_del + 1));
      int nd = odd_var_count(alg->sector());
      if (nd > 0) g.dmask = static_cast<std::uint8_t>(rng() % (1u << nd));
      factors.push_back(g);
    }
    Element e = canonicalize_list(alg, factors, Scalar(1));
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

CheckResult check_virasoro(const Element& L) {
  CheckResult res;
  res.check = "virasoro";
  const AlgebraSpec* alg = L.algebra();
  if (!alg || alg->sector() != Sector::N0) throw SectorError("check_virasoro needs sector 0");
  LambdaElement br = bracket(L, L);
  LambdaElement diff = br - covariant(L, Scalar(1), Scalar(2), false);
  MixedWord top = word_lambda(3);
  if (!extract_charge(diff, top, 12, &res.central_charge, &res.witness,
                      "[L_l L] = (del + 2 lam) L + c/12 lam^3"))
    return res;
  for (std::uint32_t r = 0; r < alg->num_generators(); ++r) {
    Element g = Element::generator(alg, r);
    LambdaElement bg = bracket(L, g);
    if (mode_coeff(bg, 0, 0) != apply_translation(g, TransOp{true, 0})) {
      res.witness = diff_witness("L_(0) = del on " + alg->gen(r).name, bg);
      return res;
    }
    Scalar ratio;
    if (!is_scalar_multiple(mode_coeff(bg, 1, 0), g, &ratio)) {
      res.witness = diff_witness("L_(1) eigenvector " + alg->gen(r).name, bg);
      return res;
    }
  }
  res.ok = true;
  return res;
}

CheckResult check_n1_pair(const Element& L, const Element& G) {
  CheckResult res;
  res.check = "n1_pair";
  const AlgebraSpec* alg = L.algebra();
  if (!alg || alg->sector() != Sector::N0) throw SectorError("check_n1_pair needs sector 0");
  CheckResult vir = check_virasoro(L);
  if (!vir.ok) {
    res.witness = vir.witness;
    return res;
  }
  // [L_l G] = (del + 3/2 lam) G
  LambdaElement lg = bracket(L, G) - covariant(G, Scalar(1), Scalar::rational(3, 2), false);
  if (!expect_zero(lg, "[L_l G] = (del + 3/2 lam) G", &res.witness)) return res;
  // [G_l G] = 2L + c/3 lam^2
  LambdaElement gg = bracket(G, G);
  LambdaElement twoL;
  twoL.add(MixedWord{}, L.scaled(Scalar(2)));
  LambdaElement diff = gg - twoL;
  Scalar c2;
  if (!extract_charge(diff, word_lambda(2), 3, &c2, &res.witness, "[G_l G] = 2L + c/3 lam^2"))
    return res;
  if (c2 != vir.central_charge) {
    res.witness = diff_witness("central charges of [L_l L] and [G_l G] disagree", diff);
    return res;
  }
  res.central_charge = c2;
  res.ok = true;
  return res;
}

CheckResult check_n2_component(const Element& L, const Element& J, const Element& Gp,
                               const Element& Gm) {
  CheckResult res;
  res.check = "n2_component";
  const AlgebraSpec* alg = L.algebra();
  if (alg && alg->sector() != Sector::N0) throw SectorError("check_n2_component needs sector 0");
  if (L.is_zero() && J.is_zero() && Gp.is_zero() && Gm.is_zero()) {
    res.ok = true;  // degenerate pass
    return res;
  }
  LambdaElement d1 = bracket(L, L) - covariant(L, Scalar(1), Scalar(2), false);
  Scalar c;
  if (!extract_charge(d1, word_lambda(3), 12, &c, &res.witness, "[L_l L]")) return res;
  for (auto* G : {&Gp, &Gm}) {
    LambdaElement d = bracket(L, *G) - covariant(*G, Scalar(1), Scalar::rational(3, 2), false);
    if (!expect_zero(d, "[L_l G+-] = (del + 3/2 lam) G+-", &res.witness)) return res;
    if (!expect_zero(bracket(*G, *G), "[G+-_l G+-] = 0", &res.witness)) return res;
  }
  // [G+_l G-] = L + (del/2 + lam) J + c/6 lam^2
  LambdaElement pm = bracket(Gp, Gm);
  LambdaElement rhs;
  rhs.add(MixedWord{}, L + apply_translation(J, TransOp{true, 0}).scaled(Scalar::rational(1, 2)));
  rhs.add(word_lambda(1), J);
  Scalar c6;
  if (!extract_charge(pm - rhs, word_lambda(2), 6, &c6, &res.witness,
                      "[G+_l G-] = L + (del/2 + lam) J + c/6 lam^2"))
    return res;
  if (c6 != c) {
    res.witness = diff_witness("central charge mismatch in [G+_l G-]", pm - rhs);
    return res;
  }
  LambdaElement lj = bracket(L, J) - covariant(J, Scalar(1), Scalar(1), false);
  if (!expect_zero(lj, "[L_l J] = (del + lam) J", &res.witness)) return res;
  for (int sgn : {+1, -1}) {
    const Element& G = sgn > 0 ? Gp : Gm;
    LambdaElement gj = bracket(G, J);
    LambdaElement want;
    want.add(MixedWord{}, sgn > 0 ? -G : G);
    if (!expect_zero(gj - want, "[G+-_l J] = -+ G+-", &res.witness)) return res;
  }
  LambdaElement jj = bracket(J, J);
  Scalar c3;
  if (!extract_charge(jj, word_lambda(1), 3, &c3, &res.witness, "[J_l J] = c/3 lam")) return res;
  if (c3 != c) {
    res.witness = diff_witness("central charge mismatch in [J_l J]", jj);
    return res;
  }
  res.central_charge = c;
  res.ok = true;
  return res;
}

CheckResult check_susy_superconformal(const Element& T, std::uint64_t seed) {
  CheckResult res;
  res.check = "susy_superconformal";
  const AlgebraSpec* alg = T.algebra();
  if (!alg || alg->sector() != Sector::N1)
    throw SectorError("check_susy_superconformal needs sector 1");
  LambdaElement br = bracket(T, T);
  LambdaElement diff = br - covariant(T, Scalar(2), Scalar(3), true);
  MixedWord top = word_lambda(2);
  top.chi = 1;
  if (!extract_charge(diff, top, 3, &res.central_charge, &res.witness,
                      "[T_L T] = (2 del + 3 lam + chi D) T + c/3 lam^2 chi"))
    return res;
  // Mode conditions on generators and a fixed random sample.
  std::vector<Element> probes;
  for (std::uint32_t r = 0; r < alg->num_generators(); ++r)
    probes.push_back(Element::generator(alg, r));
  std::size_t n_gen = probes.size();
  for (Element& m : random_monomials(alg, 20, seed)) probes.push_back(std::move(m));
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Element& v = probes[k];
    LambdaElement bv = bracket(T, v);
    if (mode_coeff(bv, 0, 0) != apply_translation(v, TransOp{true, 0}).scaled(Scalar(2))) {
      res.witness = diff_witness("T_(0|0) = 2 del", bv);
      return res;
    }
    if (mode_coeff(bv, 0, 1) != apply_translation(v, TransOp{false, 1})) {
      res.witness = diff_witness("T_(0|1) = D", bv);
      return res;
    }
    if (k < n_gen) {
      Scalar ratio;
      if (!is_scalar_multiple(mode_coeff(bv, 1, 0), v, &ratio)) {
        res.witness = diff_witness("T_(1|0) eigenvector " + element_text(v), bv);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

CheckResult check_n2_susy_pair(const Element& T, const Element& J) {
  CheckResult res;
  res.check = "n2_susy_pair";
  const AlgebraSpec* alg = T.algebra();
  if (!alg || alg->sector() != Sector::N1) throw SectorError("check_n2_susy_pair needs sector 1");
  CheckResult st = check_susy_superconformal(T);
  if (!st.ok) {
    res.witness = st.witness;
    return res;
  }
  LambdaElement tj = bracket(T, J) - covariant(J, Scalar(2), Scalar(2), true);
  if (!expect_zero(tj, "[T_L J] = (2 del + 2 lam + chi D) J", &res.witness)) return res;
  LambdaElement jj = bracket(J, J);
  LambdaElement tpart;
  tpart.add(MixedWord{}, T);
  MixedWord lamchi = word_lambda(1);
  lamchi.chi = 1;
  Scalar c;
  if (!extract_charge(jj - tpart, lamchi, 3, &c, &res.witness, "[J_L J] = T + c/3 lam chi"))
    return res;
  if (c != st.central_charge) {
    res.witness = diff_witness("central charge mismatch between [T_L T] and [J_L J]", jj);
    return res;
  }
  res.central_charge = c;
  res.ok = true;
  return res;
}

CheckResult check_nk2_superconformal(const Element& P) {
  CheckResult res;
  res.check = "nk2_superconformal";
  const AlgebraSpec* alg = P.algebra();
  if (!alg || alg->sector() != Sector::N2)
    throw SectorError("check_nk2_superconformal needs sector 2");
  LambdaElement br = bracket(P, P);
  LambdaElement diff = br - covariant(P, Scalar(2), Scalar(2), true);
  MixedWord top = word_lambda(1);
  top.chi = 3;
  if (!extract_charge(diff, top, 3, &res.central_charge, &res.witness,
                      "[P_L P] = (2 del + 2 lam + chi1 D1 + chi2 D2) P + c/3 lam chi1 chi2"))
    return res;
  for (std::uint32_t r = 0; r < alg->num_generators(); ++r) {
    Element g = Element::generator(alg, r);
    LambdaElement bg = bracket(P, g);
    if (mode_coeff(bg, 0, 0) != apply_translation(g, TransOp{true, 0}).scaled(Scalar(2))) {
      res.witness = diff_witness("P zero mode = 2 del on " + alg->gen(r).name, bg);
      return res;
    }
    // Def 2.16 modes: the chi^i coefficient of [P_L v] must be D^i v, i.e.
    // P_(0|10) = -D^1 and P_(0|01) = -D^2 in mode form.
    for (int i = 1; i <= 2; ++i) {
      if (mode_coeff(bg, 0, static_cast<std::uint8_t>(1u << (i - 1))) !=
          apply_translation(g, TransOp{false, i})) {
        res.witness = diff_witness("chi^" + std::to_string(i) + " mode on " + alg->gen(r).name, bg);
        return res;
      }
    }
    Scalar ratio;
    if (!is_scalar_multiple(mode_coeff(bg, 1, 0), g, &ratio)) {
      res.witness = diff_witness("P_(1|00) eigenvector " + alg->gen(r).name, bg);
      return res;
    }
  }
  res.ok = true;
  return res;
}

WeightReport conformal_weight(const Element& T, const Element& v) {
  WeightReport rep;
  const AlgebraSpec* alg = T.algebra();
  if (!alg) return rep;
  Sector s = alg->sector();
  LambdaElement br = bracket(T, v);
  Scalar two = s == Sector::N0 ? Scalar(1) : Scalar(2);
  // Constant term must be (2) del v; chi terms must be D^i v.
  Element cterm = mode_coeff(br, 0, 0);
  if (cterm != apply_translation(v, TransOp{true, 0}).scaled(two)) {
    rep.witness = diff_witness("constant term is not (2) del v", br);
    return rep;
  }
  for (int i = 1; i <= odd_var_count(s); ++i) {
    if (mode_coeff(br, 0, static_cast<std::uint8_t>(1u << (i - 1))) !=
        apply_translation(v, TransOp{false, i})) {
      rep.witness = diff_witness("chi term is not D v", br);
      return rep;
    }
  }
  Element lam_coeff = mode_coeff(br, 1, 0);
  Scalar ratio;
  if (!is_scalar_multiple(lam_coeff, v, &ratio)) {
    rep.witness = diff_witness("lambda coefficient is not a multiple of v", br);
    return rep;
  }
  rep.eigenvector = true;
  rep.delta = s == Sector::N0 ? ratio : ratio.times(GaussRat::rational(1, 2));
  LambdaElement cov = covariant(v, two, ratio, true);
  rep.residual = br - cov;
  rep.primary = rep.residual.is_zero();
  return rep;
}

std::vector<ConstraintSystem::Equation> ConstraintSystem::residuals_at(
    const std::map<ParamId, Scalar>& assignment) const {
  std::vector<Equation> nonzero;
  for (auto& eq : equations) {
    Scalar r = eq.residual.substitute(assignment);
    if (!r.is_zero()) nonzero.push_back(Equation{eq.mono, eq.word, r});
  }
  return nonzero;
}

ConstraintSystem ansatz_constraints(const std::vector<Element>& monomials,
                                    const std::vector<std::string>& unknown_names) {
  if (monomials.empty()) throw AlgebraError("ansatz needs at least one monomial");
  if (monomials.size() != unknown_names.size())
    throw AlgebraError("one unknown per monomial required");
  const AlgebraSpec* alg = monomials.front().algebra();
  if (!alg || alg->sector() != Sector::N1) throw SectorError("ansatz_constraints needs sector 1");
  ConstraintSystem sys;
  Element T;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    ParamId id = param_intern(unknown_names[i]);
    sys.unknowns.push_back(id);
    T += monomials[i].scaled(Scalar::param(id));
  }
  sys.charge_unknown = param_intern("c_sh");
  LambdaElement diff = bracket(T, T) - covariant(T, Scalar(2), Scalar(3), true);
  MixedWord top = word_lambda(2);
  top.chi = 1;
  LambdaElement ctop;
  ctop.add(top, Element::vacuum(alg).scaled(Scalar::param(sys.charge_unknown).div_int(3)));
  diff = diff - ctop;
  for (auto& [w, e] : diff.terms())
    for (auto& [m, c] : e.terms()) sys.equations.push_back({m, w, c});
  return sys;
}

}  // namespace scv
