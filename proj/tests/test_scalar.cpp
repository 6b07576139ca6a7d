#include <doctest.h>

#include <random>

#include "scvertex/render.hpp"
#include "scvertex/scalar.hpp"

using namespace scv;

namespace {
Scalar random_scalar(std::mt19937_64& rng) {
  Scalar s;
  int nterms = 1 + rng() % 3;
  for (int t = 0; t < nterms; ++t) {
    Scalar term(GaussRat(mpq_class(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4),
                         mpq_class(static_cast<long>(rng() % 5) - 2)));
    int npar = rng() % 3;
    for (int p = 0; p < npar; ++p)
      term = term * Scalar::param("p" + std::to_string(rng() % 3));
    s += term;
  }
  return s;
}
}  // namespace

TEST_CASE("gaussian rational identities") {
  GaussRat half = GaussRat::rational(1, 2);
  GaussRat i = GaussRat::imaginary_unit();
  // (1/2 + i)(1/2 - i) = 5/4
  CHECK((half + i) * (half - i) == GaussRat::rational(5, 4));
  // (-i)(i) = 1
  CHECK((-i) * i == GaussRat(1));
  CHECK(i * i == GaussRat(-1));
  CHECK((GaussRat(1) / i) == -i);
}

TEST_CASE("shift parameter polynomials") {
  Scalar ta = Scalar::param("t_a");
  Scalar tb = Scalar::param("t_b");
  Scalar ca = Scalar(6) * ta + Scalar(3);
  Scalar cb = Scalar(6) * tb + Scalar(3);
  Scalar sum = ca + cb;
  CHECK(sum == Scalar(6) * ta + Scalar(6) * tb + Scalar(6));
}

TEST_CASE("eval specializes and stays symbolic") {
  Scalar ta = Scalar::param("t_a");
  ParamId id = param_intern("t_a");
  Scalar c = Scalar(6) * ta + Scalar(3);
  CHECK(c.eval({{id, GaussRat(0)}}) == Scalar(3));
  CHECK(ta.eval({}) == ta);
  Scalar two_t_plus_one = Scalar(2) * ta + Scalar(1);
  CHECK(two_t_plus_one.eval({{id, GaussRat::rational(-1, 2)}}).is_zero());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(1234);
  for (int k = 0; k < 50; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("eval is a ring homomorphism") {
  std::mt19937_64 rng(99);
  std::map<ParamId, GaussRat> assign{{param_intern("p0"), GaussRat::rational(2, 3)},
                                     {param_intern("p1"), GaussRat(-1)}};
  for (int k = 0; k < 30; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK((a * b).eval(assign) == a.eval(assign) * b.eval(assign));
    CHECK((a + b).eval(assign) == a.eval(assign) + b.eval(assign));
  }
}

TEST_CASE("scalar rendering and json round trip") {
  Scalar s = Scalar::rational(3, 2) * Scalar::param("t_a") + Scalar::rational(1, 2) * Scalar::imaginary_unit();
  CHECK(scalar_text(s) == "1/2*i + 3/2*t_a");
  CHECK(scalar_from_json(scalar_json(s)) == s);
  CHECK(scalar_text(Scalar()) == "0");
}
