#include "scvertex/element.hpp"

#include <bit>

#include "scvertex/algebra.hpp"
#include "scvertex/bracket.hpp"

namespace scv {

namespace {
const AlgebraSpec* unify(const AlgebraSpec* a, const AlgebraSpec* b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b) throw AlgebraError("elements belong to different algebras");
  return a;
}
}  // namespace

Element Element::vacuum(const AlgebraSpec* alg) {
  return from_monomial(alg, Monomial{}, Scalar(1));
}

Element Element::generator(const AlgebraSpec* alg, std::uint32_t rank) {
  return from_monomial(alg, Monomial{DGen{rank, 0, 0}}, Scalar(1));
}

Element Element::from_monomial(const AlgebraSpec* alg, Monomial m, Scalar c) {
  Element e;
  e.alg_ = alg;
  if (!c.is_zero()) e.terms_.emplace(std::move(m), std::move(c));
  return e;
}

void Element::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element& Element::operator+=(const Element& o) {
  alg_ = unify(alg_, o.alg_);
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element Element::operator-() const {
  Element r;
  r.alg_ = alg_;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::scaled(const Scalar& s) const {
  Element r;
  r.alg_ = alg_;
  if (s.is_zero()) return r;
  for (auto& [m, c] : terms_) {
    Scalar c2 = c * s;
    if (!c2.is_zero()) r.terms_.emplace(m, std::move(c2));
  }
  return r;
}

int dgen_parity(const AlgebraSpec* alg, const DGen& g) {
  int p = alg->gen(g.rank).odd ? 1 : 0;
  return (p + std::popcount(g.dmask)) & 1;
}

int monomial_parity(const AlgebraSpec* alg, const Monomial& m) {
  int p = 0;
  for (const DGen& g : m) p += dgen_parity(alg, g);
  return p & 1;
}

int Element::parity() const {
  if (terms_.empty()) return 0;
  int p = monomial_parity(alg_, terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (monomial_parity(alg_, m) != p) return -1;
  return p;
}

std::pair<Element, Element> Element::split_parity() const {
  Element even, odd;
  even.alg_ = alg_;
  odd.alg_ = alg_;
  for (auto& [m, c] : terms_) {
    if (monomial_parity(alg_, m) == 0)
      even.terms_.emplace(m, c);
    else
      odd.terms_.emplace(m, c);
  }
  return {even, odd};
}

Scalar Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<Scalar> Element::vacuum_coefficient() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

bool Element::uses_param(ParamId id) const {
  for (auto& [m, c] : terms_)
    if (c.uses_param(id)) return true;
  return false;
}

Element Element::substitute_params(const std::map<ParamId, Scalar>& assignment) const {
  Element r;
  r.alg_ = alg_;
  for (auto& [m, c] : terms_) r.add(m, c.substitute(assignment));
  return r;
}

// --- derivations ----------------------------------------------------------

Element apply_translation(const Element& v, TransOp op) {
  const AlgebraSpec* alg = v.algebra();
  if (!alg) return Element::zero();
  if (!op.is_del) {
    if (op.index < 1 || op.index > odd_var_count(alg->sector()))
      throw SectorError("derivation not available in this sector");
  } else if (alg->sector() == Sector::N0 && !op.is_del) {
    throw SectorError("no odd derivation in sector 0");
  }
  int op_par = op.is_del ? 0 : 1;
  Element out;
  for (auto& [m, c] : v.terms()) {
    int lead = 0;  // parity of the factors already passed
    for (std::size_t k = 0; k < m.size(); ++k) {
      int sign = (op_par && (lead & 1)) ? -1 : 1;
      for (auto& [s, g2] : alg->apply_op(m[k], op)) {
        std::vector<DGen> factors = m;
        factors[k] = g2;
        Scalar coeff = c * s;
        if (sign < 0) coeff = -coeff;
        out += canonicalize_list(alg, factors, coeff);
      }
      lead += dgen_parity(alg, m[k]);
    }
  }
  return out;
}

// --- normal ordering ------------------------------------------------------

namespace {

Element insert_factor(const AlgebraSpec* alg, const DGen& f, const Monomial& m,
                      const Scalar& coeff);

Element insert_factor_elem(const AlgebraSpec* alg, const DGen& f, const Element& e) {
  Element out;
  for (auto& [m, c] : e.terms()) out += insert_factor(alg, f, m, c);
  return out;
}

Element np_mono(const AlgebraSpec* alg, const Monomial& ma, const Monomial& mb);

// :f m: with m canonical.
Element insert_factor(const AlgebraSpec* alg, const DGen& f, const Monomial& m,
                      const Scalar& coeff) {
  if (coeff.is_zero()) return Element::zero();
  if (m.empty()) return Element::from_monomial(alg, Monomial{f}, coeff);
  const DGen& g = m.front();
  if (f < g) {
    Monomial r;
    r.reserve(m.size() + 1);
    r.push_back(f);
    r.insert(r.end(), m.begin(), m.end());
    return Element::from_monomial(alg, std::move(r), coeff);
  }
  Monomial tail(m.begin() + 1, m.end());
  if (f == g) {
    if (dgen_parity(alg, f) == 0) {
      Monomial r;
      r.reserve(m.size() + 1);
      r.push_back(f);
      r.insert(r.end(), m.begin(), m.end());
      return Element::from_monomial(alg, std::move(r), coeff);
    }
    // Odd square: 2 :f(f c): equals the quasi-commutativity integral times c.
    Element fE = Element::from_monomial(alg, Monomial{f}, Scalar(1));
    Element corr = qc_integral(alg, bracket(fE, fE));
    Element rest = Element::from_monomial(alg, tail, Scalar(1));
    return normal_product(corr, rest).scaled(coeff.div_int(2));
  }
  // f > g: swap with the quasi-commutativity correction.
  int sg = (dgen_parity(alg, f) && dgen_parity(alg, g)) ? -1 : 1;
  Element inner = insert_factor(alg, f, tail, Scalar(1));
  Element part1 = insert_factor_elem(alg, g, inner).scaled(sg < 0 ? -coeff : coeff);
  Element corr = qc_integral(
      alg, bracket(Element::from_monomial(alg, Monomial{f}, Scalar(1)),
                   Element::from_monomial(alg, Monomial{g}, Scalar(1))));
  Element part2;
  if (!corr.is_zero())
    part2 = normal_product(corr, Element::from_monomial(alg, tail, Scalar(1))).scaled(coeff);
  return part1 + part2;
}

Element np_mono(const AlgebraSpec* alg, const Monomial& ma, const Monomial& mb) {
  if (ma.empty()) return Element::from_monomial(alg, mb, Scalar(1));
  if (mb.empty()) return Element::from_monomial(alg, ma, Scalar(1));
  AlgebraSpec::MonoPair key{ma, mb};
  if (auto hit = alg->cached_product(key)) return *hit;
  Element result;
  if (ma.size() == 1) {
    result = insert_factor(alg, ma.front(), mb, Scalar(1));
  } else {
    // :(f a')c: = :f(a'c): + (int_0^nabla dL f)[a' L c] + (-1)^{fa'}(int_0^nabla dL a')[f L c]
    DGen f = ma.front();
    Monomial rest(ma.begin() + 1, ma.end());
    Element inner = np_mono(alg, rest, mb);
    result = insert_factor_elem(alg, f, inner);
    Element fE = Element::from_monomial(alg, Monomial{f}, Scalar(1));
    Element restE = Element::from_monomial(alg, rest, Scalar(1));
    Element bE = Element::from_monomial(alg, mb, Scalar(1));
    result += qa_int_term(alg, fE, bracket(restE, bE));
    Element t2 = qa_int_term(alg, restE, bracket(fE, bE));
    int sg = (dgen_parity(alg, f) && monomial_parity(alg, rest)) ? -1 : 1;
    result += sg < 0 ? -t2 : t2;
  }
  alg->store_product(key, result);
  return result;
}

}  // namespace

Element normal_product(const Element& a, const Element& b) {
  const AlgebraSpec* alg = unify(a.algebra(), b.algebra());
  if (!alg) return Element::zero();
  Element out;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) out += np_mono(alg, ma, mb).scaled(ca * cb);
  return out;
}

Element canonicalize_list(const AlgebraSpec* alg, const std::vector<DGen>& factors,
                          const Scalar& coeff) {
  Element acc = Element::vacuum(alg);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    acc = insert_factor_elem(alg, *it, acc);
  return acc.scaled(coeff);
}

// --- word/element interactions --------------------------------------------

LambdaElement collapse_words(const LambdaElement& p) {
  LambdaElement out;
  for (auto& [w, e] : p.terms()) {
    if (w.pure_bracket_vars()) {
      out.add(w, e);
      continue;
    }
    Element e2 = e;
    for (int i = 2; i >= 1; --i)
      if (w.dd & (1u << (i - 1))) e2 = apply_translation(e2, TransOp{false, i});
    for (std::uint32_t k = 0; k < w.del; ++k) e2 = apply_translation(e2, TransOp{true, 0});
    MixedWord w2 = w;
    w2.del = 0;
    w2.dd = 0;
    out.add(w2, e2);
  }
  return out;
}

LambdaElement lmul_element(const Element& h, const LambdaElement& p) {
  int ph = h.parity();
  if (ph < 0) {
    auto [ev, od] = h.split_parity();
    return lmul_element(ev, p) + lmul_element(od, p);
  }
  LambdaElement out;
  for (auto& [w, e] : p.terms()) {
    Element prod = normal_product(h, e);
    if (ph == 1 && w.parity() == 1) prod = -prod;
    out.add(w, prod);
  }
  return out;
}

LambdaElement rmul_element(const LambdaElement& p, const Element& c) {
  LambdaElement out;
  for (auto& [w, e] : p.terms()) out.add(w, normal_product(e, c));
  return out;
}

LambdaElement lambda_scaled(const LambdaElement& p, const Scalar& s) {
  LambdaElement out;
  for (auto& [w, e] : p.terms()) out.add(w, e.scaled(s));
  return out;
}

}  // namespace scv
