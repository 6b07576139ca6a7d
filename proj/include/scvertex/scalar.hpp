#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace scv {

// Exact element of Q(i): re + im*i with arbitrary-precision rationals.
struct GaussRat {
  mpq_class re{0};
  mpq_class im{0};

  GaussRat() = default;
  GaussRat(long n) : re(n) {}
  GaussRat(const mpq_class& r) : re(r) { re.canonicalize(); }
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussRat rational(long num, long den);
  static GaussRat imaginary_unit() { return GaussRat(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat operator/(const GaussRat& o) const;
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
  bool operator<(const GaussRat& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }
};

// Interned formal parameter names (t_a shift parameters, ansatz unknowns, ...).
using ParamId = std::uint32_t;

ParamId param_intern(const std::string& name);
const std::string& param_name(ParamId id);
bool param_lookup(const std::string& name, ParamId& out);

// Monomial in the parameters: sorted (id, exponent) pairs, exponents > 0.
using ParamMono = std::vector<std::pair<ParamId, std::uint32_t>>;

// Exact multivariate polynomial in the formal parameters over Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) { if (n != 0) terms_[{}] = GaussRat(n); }
  Scalar(const GaussRat& c) { if (!c.is_zero()) terms_[{}] = c; }

  static Scalar rational(long num, long den) { return Scalar(GaussRat::rational(num, den)); }
  static Scalar imaginary_unit() { return Scalar(GaussRat::imaginary_unit()); }
  static Scalar param(const std::string& name);
  static Scalar param(ParamId id);

  bool is_zero() const { return terms_.empty(); }
  // Constant means no parameters.
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  GaussRat constant_value() const;  // requires is_constant()

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);

  Scalar times(const GaussRat& c) const;
  Scalar div_int(long n) const { return times(GaussRat::rational(1, n)); }
  // Uniform name shared with Element so VarPoly templates work over both.
  Scalar scaled(const Scalar& s) const { return *this * s; }

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

  // Partial substitution; unassigned parameters stay symbolic.
  Scalar eval(const std::map<ParamId, GaussRat>& assignment) const;
  Scalar substitute(const std::map<ParamId, Scalar>& assignment) const;

  bool uses_param(ParamId id) const;
  std::vector<ParamId> params_used() const;

  // If *this == q * denom for a single Gaussian-rational q, return q.
  std::optional<GaussRat> ratio_to(const Scalar& denom) const;

  const std::map<ParamMono, GaussRat>& terms() const { return terms_; }
  static Scalar from_terms(std::map<ParamMono, GaussRat> t);

 private:
  std::map<ParamMono, GaussRat> terms_;
};

}  // namespace scv
