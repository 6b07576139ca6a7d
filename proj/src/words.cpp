#include "scvertex/words.hpp"

#include <bit>

namespace scv {

int MixedWord::parity() const {
  return (std::popcount(chi) + std::popcount(eta) + std::popcount(dd)) & 1;
}

MixedWord word_lambda(std::uint32_t n) { MixedWord w; w.lam = n; return w; }
MixedWord word_chi(int index) { MixedWord w; w.chi = static_cast<std::uint8_t>(1u << (index - 1)); return w; }
MixedWord word_gamma(std::uint32_t n) { MixedWord w; w.gam = n; return w; }
MixedWord word_eta(int index) { MixedWord w; w.eta = static_cast<std::uint8_t>(1u << (index - 1)); return w; }
MixedWord word_del(std::uint32_t n) { MixedWord w; w.del = n; return w; }
MixedWord word_dop(int index) { MixedWord w; w.dd = static_cast<std::uint8_t>(1u << (index - 1)); return w; }

namespace {

// Odd symbols, encoded so that the numeric order is the canonical word order.
enum SymKind : int { kChi = 0, kEta = 1, kD = 2 };
struct Sym {
  int kind;
  int index;  // 1 or 2
  bool operator<(const Sym& o) const { return std::tie(kind, index) < std::tie(o.kind, o.index); }
  bool operator==(const Sym& o) const { return kind == o.kind && index == o.index; }
};

// Central value of the supercommutator [x, y] = xy + yx, as (which, coeff):
// which: 0 none, 1 lambda, 2 gamma, 3 del.
std::pair<int, long> supercomm(const Sym& x, const Sym& y) {
  if (x.index != y.index) return {0, 0};
  if (x.kind == kChi && y.kind == kChi) return {1, -2};
  if (x.kind == kEta && y.kind == kEta) return {2, -2};
  if (x.kind == kD && y.kind == kD) return {3, 2};
  if ((x.kind == kD && y.kind == kChi) || (x.kind == kChi && y.kind == kD)) return {1, 2};
  if ((x.kind == kD && y.kind == kEta) || (x.kind == kEta && y.kind == kD)) return {2, 2};
  return {0, 0};  // chi vs eta anticommute freely
}

struct State {
  std::uint32_t lam, gam, del;
  std::vector<Sym> syms;
  long coeff;
};

void bump(State& st, int which, long k) {
  st.coeff *= k;
  if (which == 1) st.lam += 1;
  else if (which == 2) st.gam += 1;
  else st.del += 1;
}

void normalize(State st, WordTerms& out) {
  for (std::size_t i = 0; i + 1 < st.syms.size(); ++i) {
    const Sym a = st.syms[i];
    const Sym b = st.syms[i + 1];
    if (a == b) {
      // x^2 = (1/2)[x,x]
      auto [which, k] = supercomm(a, a);
      State next = st;
      next.syms.erase(next.syms.begin() + i, next.syms.begin() + i + 2);
      bump(next, which, k / 2);
      normalize(std::move(next), out);
      return;
    }
    if (b < a) {
      // xy = -yx + [x,y]
      State swapped = st;
      std::swap(swapped.syms[i], swapped.syms[i + 1]);
      swapped.coeff = -swapped.coeff;
      auto [which, k] = supercomm(a, b);
      if (which != 0) {
        State rel = st;
        rel.syms.erase(rel.syms.begin() + i, rel.syms.begin() + i + 2);
        bump(rel, which, k);
        normalize(std::move(rel), out);
      }
      normalize(std::move(swapped), out);
      return;
    }
  }
  MixedWord w;
  w.lam = st.lam;
  w.gam = st.gam;
  w.del = st.del;
  for (const Sym& s : st.syms) {
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (s.index - 1));
    if (s.kind == kChi) w.chi |= bit;
    else if (s.kind == kEta) w.eta |= bit;
    else w.dd |= bit;
  }
  out.emplace_back(w, st.coeff);
}

void append_syms(std::vector<Sym>& syms, const MixedWord& w) {
  for (int i = 1; i <= 2; ++i)
    if (w.chi & (1u << (i - 1))) syms.push_back({kChi, i});
  for (int i = 1; i <= 2; ++i)
    if (w.eta & (1u << (i - 1))) syms.push_back({kEta, i});
  for (int i = 1; i <= 2; ++i)
    if (w.dd & (1u << (i - 1))) syms.push_back({kD, i});
}

void combine(WordTerms& terms) {
  std::map<MixedWord, long> m;
  for (auto& [w, k] : terms) {
    long& v = m[w];
    v += k;
  }
  terms.clear();
  for (auto& [w, k] : m)
    if (k != 0) terms.emplace_back(w, k);
}

}  // namespace

namespace detail {

int berezin_sign(const MixedWord& w, int index) {
  std::uint8_t bit = static_cast<std::uint8_t>(1u << (index - 1));
  int crossed = std::popcount(w.chi) + std::popcount(static_cast<std::uint8_t>(w.eta & (bit - 1)));
  return crossed % 2 == 0 ? 1 : -1;
}

MixedWord berezin_strip(const MixedWord& w, int index) {
  MixedWord r = w;
  r.eta = static_cast<std::uint8_t>(r.eta & ~(1u << (index - 1)));
  return r;
}

void check_sector_word(const MixedWord& w, Sector s) {
  std::uint8_t allowed = static_cast<std::uint8_t>((1u << odd_var_count(s)) - 1);
  if ((w.chi & ~allowed) || (w.eta & ~allowed) || (w.dd & ~allowed))
    throw std::invalid_argument("word uses odd variables outside the sector");
}

}  // namespace detail

WordTerms word_mul(const MixedWord& a, const MixedWord& b, Sector s) {
  detail::check_sector_word(a, s);
  detail::check_sector_word(b, s);
  State st;
  st.lam = a.lam + b.lam;
  st.gam = a.gam + b.gam;
  st.del = a.del + b.del;
  st.coeff = 1;
  append_syms(st.syms, a);
  append_syms(st.syms, b);
  WordTerms out;
  normalize(std::move(st), out);
  combine(out);
  return out;
}

}  // namespace scv
