#include "scvertex/scalar.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace scv {

GaussRat GaussRat::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::operator/(const GaussRat& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  mpq_class n2 = o.re * o.re + o.im * o.im;
  return GaussRat((re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2);
}

namespace {
struct ParamTable {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, ParamId> ids;
};
ParamTable& table() {
  static ParamTable t;
  return t;
}
}  // namespace

ParamId param_intern(const std::string& name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  ParamId id = static_cast<ParamId>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& param_name(ParamId id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.at(id);
}

bool param_lookup(const std::string& name, ParamId& out) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(name);
  if (it == t.ids.end()) return false;
  out = it->second;
  return true;
}

Scalar Scalar::param(const std::string& name) { return param(param_intern(name)); }

Scalar Scalar::param(ParamId id) {
  Scalar s;
  s.terms_[{{id, 1}}] = GaussRat(1);
  return s;
}

GaussRat Scalar::constant_value() const {
  if (terms_.empty()) return GaussRat();
  if (terms_.size() != 1 || !terms_.begin()->first.empty())
    throw std::logic_error("Scalar::constant_value on non-constant");
  return terms_.begin()->second;
}

Scalar Scalar::from_terms(std::map<ParamMono, GaussRat> t) {
  Scalar s;
  for (auto& [m, c] : t)
    if (!c.is_zero()) s.terms_.emplace(m, c);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

namespace {
ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
  ParamMono r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}
}  // namespace

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      ParamMono m = mono_mul(ma, mb);
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        GaussRat c = ca * cb;
        if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

Scalar Scalar::times(const GaussRat& c) const {
  Scalar r;
  if (c.is_zero()) return r;
  for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Scalar Scalar::eval(const std::map<ParamId, GaussRat>& assignment) const {
  std::map<ParamId, Scalar> sub;
  for (auto& [id, v] : assignment) sub.emplace(id, Scalar(v));
  return substitute(sub);
}

Scalar Scalar::substitute(const std::map<ParamId, Scalar>& assignment) const {
  Scalar total;
  for (auto& [m, c] : terms_) {
    Scalar term(c);
    ParamMono rest;
    for (auto& [id, exp] : m) {
      auto it = assignment.find(id);
      if (it == assignment.end()) {
        rest.emplace_back(id, exp);
      } else {
        for (std::uint32_t k = 0; k < exp; ++k) term = term * it->second;
      }
    }
    if (!rest.empty()) {
      Scalar restpoly;
      restpoly.terms_[rest] = GaussRat(1);
      term = term * restpoly;
    }
    total += term;
  }
  return total;
}

bool Scalar::uses_param(ParamId id) const {
  for (auto& [m, c] : terms_)
    for (auto& [pid, e] : m)
      if (pid == id) return true;
  return false;
}

std::vector<ParamId> Scalar::params_used() const {
  std::vector<ParamId> out;
  for (auto& [m, c] : terms_)
    for (auto& [pid, e] : m)
      if (std::find(out.begin(), out.end(), pid) == out.end()) out.push_back(pid);
  return out;
}

std::optional<GaussRat> Scalar::ratio_to(const Scalar& denom) const {
  if (denom.is_zero()) return std::nullopt;
  if (is_zero()) return GaussRat();
  // Candidate from the leading terms, then verify exactly.
  auto& [mn, cn] = *terms_.begin();
  auto& [md, cd] = *denom.terms_.begin();
  if (mn != md) return std::nullopt;
  GaussRat q = cn / cd;
  if (*this == denom.times(q)) return q;
  return std::nullopt;
}

}  // namespace scv
