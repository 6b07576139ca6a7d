#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "scvertex/scalar.hpp"

namespace scv {

enum class Sector : int { N0 = 0, N1 = 1, N2 = 2 };

inline int odd_var_count(Sector s) { return static_cast<int>(s); }
// The Lambda-bracket map itself is odd in sector 1, even in sectors 0 and 2.
inline int bracket_parity(Sector s) { return s == Sector::N1 ? 1 : 0; }

// Canonical word lambda^lam chi^chi gamma^gam eta^eta del^del D^dd,
// with odd masks read in index order (bit 0 = superscript 1).
struct MixedWord {
  std::uint32_t lam = 0;
  std::uint8_t chi = 0;
  std::uint32_t gam = 0;
  std::uint8_t eta = 0;
  std::uint32_t del = 0;
  std::uint8_t dd = 0;

  int parity() const;
  bool is_one() const { return lam == 0 && chi == 0 && gam == 0 && eta == 0 && del == 0 && dd == 0; }
  bool pure_bracket_vars() const { return del == 0 && dd == 0; }
  bool has_aux() const { return gam != 0 || eta != 0; }

  auto key() const { return std::tie(lam, chi, gam, eta, del, dd); }
  bool operator<(const MixedWord& o) const { return key() < o.key(); }
  bool operator==(const MixedWord& o) const { return key() == o.key(); }
};

MixedWord word_lambda(std::uint32_t n = 1);
MixedWord word_chi(int index);  // index: 1-based superscript
MixedWord word_gamma(std::uint32_t n = 1);
MixedWord word_eta(int index);
MixedWord word_del(std::uint32_t n = 1);
MixedWord word_dop(int index);

// Linear combination of canonical words with integer coefficients, as produced
// by normalizing a product of generators.
using WordTerms = std::vector<std::pair<MixedWord, long>>;

// Product of two canonical words, fully normalized for the given sector.
WordTerms word_mul(const MixedWord& a, const MixedWord& b, Sector s);

template <class C>
class VarPoly {
 public:
  VarPoly() = default;

  bool is_zero() const { return terms_.empty(); }
  void add(const MixedWord& w, const C& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  VarPoly& operator+=(const VarPoly& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  VarPoly operator+(const VarPoly& o) const {
    VarPoly r = *this;
    r += o;
    return r;
  }
  VarPoly operator-() const {
    VarPoly r;
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  VarPoly operator-(const VarPoly& o) const { return *this + (-o); }
  bool operator==(const VarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const VarPoly& o) const { return !(*this == o); }

  template <class S>
  VarPoly scaled(const S& s) const {
    VarPoly r;
    for (auto& [w, c] : terms_) r.add(w, c * s);
    return r;
  }

  const std::map<MixedWord, C>& terms() const { return terms_; }
  C coeff(const MixedWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C() : it->second;
  }

 private:
  std::map<MixedWord, C> terms_;
};

using ScalarPoly = VarPoly<Scalar>;

// Left Berezin derivative with respect to eta^index; the sign counts the odd
// symbols standing left of eta in the canonical word order (chi's, lower eta's).
template <class C>
VarPoly<C> berezin_eta(const VarPoly<C>& p, int index);

// Multiply by a single canonical word from the left / right.
template <class C>
VarPoly<C> word_lmul(const MixedWord& w, const VarPoly<C>& p, Sector s);
template <class C>
VarPoly<C> word_rmul(const VarPoly<C>& p, const MixedWord& w, Sector s);

enum class Bound { Zero, LambdaVar, DelOp, NegDelOp };

// Formal antiderivative in gamma evaluated between bounds. Operator bounds
// substitute gamma by (+-del) recorded in the word's del-power; odd variables
// are never substituted by bound evaluation.
template <class C>
VarPoly<C> gamma_integral(const VarPoly<C>& p, Bound lower, Bound upper, Sector s);

// The nested Wick integral: sector 0 plain, sector 1 d_eta after the gamma
// integral, sector 2 d_eta1 d_eta2 after it.
template <class C>
VarPoly<C> full_nested_integral(const VarPoly<C>& p, Sector s);

// lambda -> -del-lambda, chi^i -> -D^i-chi^i; gamma/eta untouched, del/D parts
// of existing words untouched.
template <class C>
VarPoly<C> substitute_skew(const VarPoly<C>& p, Sector s);

// Renames for the auxiliary bracket family.
template <class C>
VarPoly<C> to_gamma_family(const VarPoly<C>& p);
template <class C>
VarPoly<C> to_lambda_plus_gamma(const VarPoly<C>& p, Sector s);

}  // namespace scv

#include "scvertex/words_impl.hpp"

