#pragma once

// Template bodies for the VarPoly operations declared in words.hpp.

namespace scv {

namespace detail {
int berezin_sign(const MixedWord& w, int index);
MixedWord berezin_strip(const MixedWord& w, int index);
void check_sector_word(const MixedWord& w, Sector s);
}  // namespace detail

template <class C>
VarPoly<C> berezin_eta(const VarPoly<C>& p, int index) {
  VarPoly<C> r;
  std::uint8_t bit = static_cast<std::uint8_t>(1u << (index - 1));
  for (auto& [w, c] : p.terms()) {
    if (!(w.eta & bit)) continue;
    int sg = detail::berezin_sign(w, index);
    r.add(detail::berezin_strip(w, index), sg < 0 ? -c : c);
  }
  return r;
}

template <class C>
VarPoly<C> word_lmul(const MixedWord& w, const VarPoly<C>& p, Sector s) {
  if (w.is_one()) return p;
  VarPoly<C> r;
  for (auto& [w2, c] : p.terms())
    for (auto& [wr, k] : word_mul(w, w2, s)) r.add(wr, c.scaled(Scalar(k)));
  return r;
}

template <class C>
VarPoly<C> word_rmul(const VarPoly<C>& p, const MixedWord& w, Sector s) {
  if (w.is_one()) return p;
  VarPoly<C> r;
  for (auto& [w2, c] : p.terms())
    for (auto& [wr, k] : word_mul(w2, w, s)) r.add(wr, c.scaled(Scalar(k)));
  return r;
}

template <class C>
VarPoly<C> gamma_integral(const VarPoly<C>& p, Bound lower, Bound upper, Sector s) {
  VarPoly<C> r;
  for (auto& [w, c] : p.terms()) {
    detail::check_sector_word(w, s);
    MixedWord anti = w;
    anti.gam += 1;
    C scaled = c.scaled(Scalar::rational(1, static_cast<long>(anti.gam)));
    for (int side = 0; side < 2; ++side) {
      Bound b = side == 0 ? upper : lower;
      int outer_sign = side == 0 ? 1 : -1;
      if (b == Bound::Zero) continue;
      MixedWord w2 = anti;
      int sign = outer_sign;
      if (b == Bound::LambdaVar) {
        w2.lam += w2.gam;
      } else {
        if (b == Bound::NegDelOp && w2.gam % 2 == 1) sign = -sign;
        w2.del += w2.gam;
      }
      w2.gam = 0;
      // Merge the substituted power with the untouched part of the word.
      r.add(w2, sign < 0 ? -scaled : scaled);
    }
  }
  return r;
}

template <class C>
VarPoly<C> full_nested_integral(const VarPoly<C>& p, Sector s) {
  VarPoly<C> r = gamma_integral(p, Bound::Zero, Bound::LambdaVar, s);
  switch (s) {
    case Sector::N0:
      return r;
    case Sector::N1:
      return berezin_eta(r, 1);
    case Sector::N2:
      return berezin_eta(berezin_eta(r, 2), 1);
  }
  return r;
}

namespace detail {
// Word-level polynomials with integer coefficients used as substitution images.
using IntPoly = std::vector<std::pair<MixedWord, long>>;

template <class C>
VarPoly<C> vp_mul_intpoly(const VarPoly<C>& acc, const IntPoly& f, Sector s) {
  VarPoly<C> r;
  for (auto& [w, c] : acc.terms())
    for (auto& [wf, k] : f)
      for (auto& [wr, k2] : word_mul(w, wf, s)) r.add(wr, c.scaled(Scalar(k * k2)));
  return r;
}
}  // namespace detail

template <class C>
VarPoly<C> substitute_skew(const VarPoly<C>& p, Sector s) {
  VarPoly<C> out;
  for (auto& [w, c] : p.terms()) {
    VarPoly<C> acc;
    acc.add(MixedWord{}, c);
    detail::IntPoly neg_nabla_lambda = {{word_del(1), -1}, {word_lambda(1), -1}};
    for (std::uint32_t k = 0; k < w.lam; ++k)
      acc = detail::vp_mul_intpoly(acc, neg_nabla_lambda, s);
    for (int i = 1; i <= odd_var_count(s); ++i) {
      if (!(w.chi & (1u << (i - 1)))) continue;
      detail::IntPoly img = {{word_dop(i), -1}, {word_chi(i), -1}};
      acc = detail::vp_mul_intpoly(acc, img, s);
    }
    MixedWord rest = w;
    rest.lam = 0;
    rest.chi = 0;
    if (!rest.is_one()) acc = detail::vp_mul_intpoly(acc, {{rest, 1}}, s);
    out += acc;
  }
  return out;
}

template <class C>
VarPoly<C> to_gamma_family(const VarPoly<C>& p) {
  VarPoly<C> out;
  for (auto& [w, c] : p.terms()) {
    if (w.has_aux()) throw std::logic_error("to_gamma_family: word already uses aux variables");
    MixedWord w2 = w;
    w2.gam = w.lam;
    w2.eta = w.chi;
    w2.lam = 0;
    w2.chi = 0;
    out.add(w2, c);
  }
  return out;
}

template <class C>
VarPoly<C> to_lambda_plus_gamma(const VarPoly<C>& p, Sector s) {
  VarPoly<C> out;
  for (auto& [w, c] : p.terms()) {
    if (w.has_aux()) throw std::logic_error("to_lambda_plus_gamma: word already uses aux variables");
    VarPoly<C> acc;
    acc.add(MixedWord{}, c);
    detail::IntPoly lam_img = {{word_lambda(1), 1}, {word_gamma(1), 1}};
    for (std::uint32_t k = 0; k < w.lam; ++k) acc = detail::vp_mul_intpoly(acc, lam_img, s);
    for (int i = 1; i <= odd_var_count(s); ++i) {
      if (!(w.chi & (1u << (i - 1)))) continue;
      detail::IntPoly img = {{word_chi(i), 1}, {word_eta(i), 1}};
      acc = detail::vp_mul_intpoly(acc, img, s);
    }
    MixedWord rest = w;
    rest.lam = 0;
    rest.chi = 0;
    if (!rest.is_one()) acc = detail::vp_mul_intpoly(acc, {{rest, 1}}, s);
    out += acc;
  }
  return out;
}

}  // namespace scv
