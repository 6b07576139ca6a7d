#include "scvertex/bracket.hpp"

#include <bit>

namespace scv {

namespace {

const AlgebraSpec* unify(const AlgebraSpec* a, const AlgebraSpec* b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b) throw AlgebraError("bracket of elements from different algebras");
  return a;
}

LambdaElement bracket_mono(const AlgebraSpec* alg, const Monomial& ma, const Monomial& mb);

// Left sesquilinearity: strip the translation word of a single left factor,
// outermost operator first. Sector 1: [Dx_L b] = chi [x_L b]; sector 2 has a
// minus sign; del strips as -lambda in every sector.
LambdaElement strip_left(const AlgebraSpec* alg, const DGen& g, const Monomial& mb) {
  Sector s = alg->sector();
  LambdaElement base = bracket_mono(alg, Monomial{DGen{g.rank, 0, 0}}, mb);
  // Build the word prefix (-lambda)^del * (s chi^{i1}) * (s chi^{i2}).
  long sign = (g.del % 2 == 0) ? 1 : -1;
  MixedWord w;
  w.lam = g.del;
  for (int i = 1; i <= 2; ++i) {
    if (!(g.dmask & (1u << (i - 1)))) continue;
    if (s == Sector::N2) sign = -sign;
    w.chi |= static_cast<std::uint8_t>(1u << (i - 1));
  }
  LambdaElement out = word_lmul(w, base, s);
  return sign < 0 ? -out : out;
}

// Apply (op + corresponding chi) from the left: the operator acts on words and
// then on coefficients; chi multiplies as a word.
LambdaElement apply_op_plus_chi(const AlgebraSpec* alg, TransOp op, const LambdaElement& p) {
  Sector s = alg->sector();
  MixedWord opw = op.is_del ? word_del(1) : word_dop(op.index);
  MixedWord chw = op.is_del ? word_lambda(1) : word_chi(op.index);
  LambdaElement out = collapse_words(word_lmul(opw, p, s));
  out += word_lmul(chw, p, s);
  return out;
}

// Right sesquilinearity for a single factor with a translation word: apply the
// innermost operator first.
LambdaElement strip_right(const AlgebraSpec* alg, const Monomial& ma, const DGen& g) {
  Sector s = alg->sector();
  int pa = monomial_parity(alg, ma);
  LambdaElement cur = bracket_mono(alg, ma, Monomial{DGen{g.rank, 0, 0}});
  std::vector<TransOp> ops;  // application order: innermost first
  for (int i = 2; i >= 1; --i)
    if (g.dmask & (1u << (i - 1))) ops.push_back(TransOp{false, i});
  for (std::uint32_t k = 0; k < g.del; ++k) ops.push_back(TransOp{true, 0});
  for (TransOp op : ops) {
    if (op.is_del) {
      cur = apply_op_plus_chi(alg, op, cur);  // (del + lambda), sign-free
    } else {
      // sector 1: (-1)^{p(a)+1}(D+chi); sector 2: (-1)^{p(a)}(D^i+chi^i)
      LambdaElement next = apply_op_plus_chi(alg, op, cur);
      bool neg = (s == Sector::N1) ? (pa % 2 == 0) : (pa % 2 == 1);
      cur = neg ? -next : next;
    }
  }
  return cur;
}

LambdaElement wick(const AlgebraSpec* alg, const Monomial& ma, const Monomial& mb) {
  Sector s = alg->sector();
  int pa = monomial_parity(alg, ma);
  DGen h = mb.front();
  Monomial rest(mb.begin() + 1, mb.end());
  int ph = dgen_parity(alg, h);
  Element hE = Element::from_monomial(alg, Monomial{h}, Scalar(1));
  Element restE = Element::from_monomial(alg, rest, Scalar(1));

  LambdaElement brh = bracket_mono(alg, ma, Monomial{h});
  LambdaElement t1 = rmul_element(brh, restE);

  LambdaElement brr = bracket_mono(alg, ma, rest);
  LambdaElement t2 = lmul_element(hE, brr);
  int wick_sign = (s == Sector::N1) ? ((pa + 1) * ph) : (pa * ph);
  if (wick_sign % 2 != 0) t2 = -t2;

  LambdaElement inner = vp_bracket_left(brh, restE, Family::Gamma);
  LambdaElement t3 = full_nested_integral(inner, s);

  return t1 + t2 + t3;
}

LambdaElement bracket_mono(const AlgebraSpec* alg, const Monomial& ma, const Monomial& mb) {
  if (ma.empty() || mb.empty()) return LambdaElement();
  AlgebraSpec::MonoPair key{ma, mb};
  if (auto hit = alg->cached_bracket(key)) return *hit;
  Sector s = alg->sector();
  LambdaElement result;
  bool left_single = ma.size() == 1;
  bool left_plain = left_single && ma.front().del == 0 && ma.front().dmask == 0;
  bool right_single = mb.size() == 1;
  bool right_plain = right_single && mb.front().del == 0 && mb.front().dmask == 0;

  if (left_single && !left_plain) {
    result = strip_left(alg, ma.front(), mb);
  } else if (left_plain && right_plain) {
    if (const LambdaElement* v = alg->table_entry(ma.front().rank, mb.front().rank)) result = *v;
  } else if (right_single && !right_plain) {
    result = strip_right(alg, ma, mb.front());
  } else if (!right_single) {
    result = wick(alg, ma, mb);
  } else {
    // left composite, right a plain generator: reduce through skew-symmetry
    LambdaElement flip = bracket_mono(alg, mb, ma);
    LambdaElement sub = collapse_words(substitute_skew(flip, s));
    int pa = monomial_parity(alg, ma);
    int pb = monomial_parity(alg, mb);
    int sg = pa * pb + (s == Sector::N1 ? 0 : 1);
    result = (sg % 2 != 0) ? -sub : sub;
  }
  alg->store_bracket(key, result);
  return result;
}

LambdaElement to_family(const LambdaElement& p, Family fam, Sector s) {
  switch (fam) {
    case Family::Lambda:
      return p;
    case Family::Gamma:
      return to_gamma_family(p);
    case Family::LambdaPlusGamma:
      return to_lambda_plus_gamma(p, s);
  }
  return p;
}

}  // namespace

LambdaElement bracket(const Element& a, const Element& b, Family fam) {
  const AlgebraSpec* alg = unify(a.algebra(), b.algebra());
  if (!alg) return LambdaElement();
  LambdaElement out;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) out += lambda_scaled(bracket_mono(alg, ma, mb), ca * cb);
  return to_family(out, fam, alg->sector());
}

LambdaElement vp_bracket_left(const LambdaElement& x, const Element& c, Family fam) {
  const AlgebraSpec* alg = c.algebra();
  LambdaElement out;
  for (auto& [w, e] : x.terms()) {
    if (e.is_zero()) continue;
    const AlgebraSpec* a2 = alg ? alg : e.algebra();
    LambdaElement br = bracket(e, c, fam);
    int sg = w.parity() * bracket_parity(a2->sector());
    LambdaElement term = word_lmul(w, br, a2->sector());
    out += (sg % 2 != 0) ? -term : term;
  }
  return out;
}

LambdaElement vp_bracket_right(const Element& a, const LambdaElement& y, Family fam) {
  int pa = a.parity();
  if (pa < 0) {
    auto [ev, od] = a.split_parity();
    return vp_bracket_right(ev, y, fam) + vp_bracket_right(od, y, fam);
  }
  const AlgebraSpec* alg = a.algebra();
  LambdaElement out;
  for (auto& [w, e] : y.terms()) {
    if (e.is_zero()) continue;
    const AlgebraSpec* a2 = alg ? alg : e.algebra();
    LambdaElement br = bracket(a, e, fam);
    int sg = w.parity() * (pa + bracket_parity(a2->sector()));
    LambdaElement term = word_lmul(w, br, a2->sector());
    out += (sg % 2 != 0) ? -term : term;
  }
  return out;
}

Element mode_action(const Element& a, unsigned j, std::uint8_t chi_mask, const Element& v) {
  const AlgebraSpec* alg = unify(a.algebra(), v.algebra());
  if (!alg) return Element::zero();
  LambdaElement br = bracket(a, v);
  MixedWord w;
  w.lam = j;
  w.chi = chi_mask;
  Element e = br.coeff(w);
  long fact = 1;
  for (unsigned k = 2; k <= j; ++k) fact *= k;
  e = e.scaled(Scalar(fact));
  if (alg->sector() == Sector::N2 && chi_mask != 0) e = -e;
  return e;
}

Element qc_integral(const AlgebraSpec* alg, const LambdaElement& br) {
  // integral_{-nabla}^{0} [a_L b] dL = sum_j (-1)^j del^{j+1}(e_j)/(j+1) over
  // the lambda^j coefficients of the underlying non-SUSY bracket.
  Sector s = alg->sector();
  std::uint8_t top = static_cast<std::uint8_t>((1u << odd_var_count(s)) - 1);
  Element out;
  for (auto& [w, e] : br.terms()) {
    if (w.chi != top || w.gam != 0 || w.eta != 0) continue;
    Element cur = (s == Sector::N2) ? -e : e;
    for (std::uint32_t k = 0; k <= w.lam; ++k) cur = apply_translation(cur, TransOp{true, 0});
    cur = cur.scaled(Scalar::rational(w.lam % 2 == 0 ? 1 : -1, static_cast<long>(w.lam) + 1));
    out += cur;
  }
  return out;
}

Element qa_int_term(const AlgebraSpec* alg, const Element& x, const LambdaElement& br) {
  Sector s = alg->sector();
  std::uint8_t top = static_cast<std::uint8_t>((1u << odd_var_count(s)) - 1);
  Element out;
  for (auto& [w, e] : br.terms()) {
    if (w.chi != top || w.gam != 0 || w.eta != 0) continue;
    Element left = x;
    for (std::uint32_t k = 0; k <= w.lam; ++k) left = apply_translation(left, TransOp{true, 0});
    Element term = normal_product(left, (s == Sector::N2) ? -e : e);
    out += term.scaled(Scalar::rational(1, static_cast<long>(w.lam) + 1));
  }
  return out;
}

bool check_skew(const Element& a, const Element& b) {
  const AlgebraSpec* alg = unify(a.algebra(), b.algebra());
  if (!alg) return true;
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0) throw AlgebraError("skew check needs pure-parity elements");
  LambdaElement lhs = bracket(b, a);
  LambdaElement sub = collapse_words(substitute_skew(bracket(a, b), alg->sector()));
  int sg = pa * pb + (alg->sector() == Sector::N1 ? 0 : 1);
  return lhs == ((sg % 2 != 0) ? -sub : sub);
}

bool check_jacobi(const Element& a, const Element& b, const Element& c) {
  const AlgebraSpec* alg = unify(unify(a.algebra(), b.algebra()), c.algebra());
  if (!alg) return true;
  Sector s = alg->sector();
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0) throw AlgebraError("jacobi check needs pure-parity elements");
  LambdaElement lhs = vp_bracket_right(a, bracket(b, c, Family::Gamma), Family::Lambda);
  LambdaElement rhs1 = vp_bracket_left(bracket(a, b), c, Family::LambdaPlusGamma);
  LambdaElement rhs2 = vp_bracket_right(b, bracket(a, c), Family::Gamma);
  int s1, s2;
  if (s == Sector::N1) {
    s1 = pa + 1;
    s2 = (pa + 1) * (pb + 1);
  } else {
    s1 = 0;
    s2 = pa * pb;
  }
  LambdaElement rhs = ((s1 % 2 != 0) ? -rhs1 : rhs1) + ((s2 % 2 != 0) ? -rhs2 : rhs2);
  return lhs == rhs;
}

}  // namespace scv
