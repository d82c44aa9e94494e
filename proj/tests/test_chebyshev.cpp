#include <doctest.h>

#include <cmath>

#include "spectrace/chebyshev.hpp"
#include "spectrace/errors.hpp"
#include "spectrace/rng.hpp"

using namespace spectrace;

TEST_SUITE("chebyshev") {

TEST_CASE("clenshaw matches explicit T_k") {
  ChebPoly t3 = ChebPoly::basis(3);
  for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0})
    CHECK(t3(x) == doctest::Approx(4 * x * x * x - 3 * x).epsilon(1e-14));

  ChebPoly p({1.0, -2.0, 0.5});
  for (double x : {-0.9, 0.1, 0.8})
    CHECK(p(x) == doctest::Approx(1.0 - 2.0 * x + 0.5 * (2 * x * x - 1)).epsilon(1e-14));
}

TEST_CASE("reference-interval mapping") {
  Interval ref{0.0, 2.0};
  ChebPoly x = ChebPoly::identity(ref);
  CHECK(x(0.0) == doctest::Approx(0.0));
  CHECK(x(1.3) == doctest::Approx(1.3));
  ChebPoly t2 = ChebPoly::basis(2, ref);
  // T_2(t) with t = x - 1.
  CHECK(t2(0.5) == doctest::Approx(2 * 0.25 - 1));
}

TEST_CASE("mul_x and product") {
  ChebPoly p({0.3, -1.2, 0.8}, {-1.0, 1.0});
  ChebPoly xp = p.mul_x();
  for (double x : {-0.8, -0.1, 0.44, 1.0})
    CHECK(xp(x) == doctest::Approx(x * p(x)).epsilon(1e-13));

  ChebPoly q({-0.5, 0.9}, {-1.0, 1.0});
  ChebPoly pq = p * q;
  for (double x : {-0.7, 0.2, 0.95})
    CHECK(pq(x) == doctest::Approx(p(x) * q(x)).epsilon(1e-13));

  Interval ref{-0.5, 1.5};
  ChebPoly r({1.0, 0.25, -0.4}, ref);
  ChebPoly xr = r.mul_x();
  for (double x : {-0.5, 0.1, 1.5})
    CHECK(xr(x) == doctest::Approx(x * r(x)).epsilon(1e-13));
}

TEST_CASE("derivative") {
  ChebPoly t4 = ChebPoly::basis(4);
  ChebPoly d = t4.derivative();
  for (double x : {-0.9, 0.0, 0.3, 0.9}) {
    double exact = 32 * x * x * x - 16 * x;  // (8x^4 - 8x^2 + 1)'
    CHECK(d(x) == doctest::Approx(exact).epsilon(1e-12));
  }
  Interval ref{0.0, 4.0};
  ChebPoly p = ChebPoly::identity(ref) * ChebPoly::identity(ref);
  ChebPoly dp = p.derivative();
  CHECK(dp(3.0) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("roots via the colleague matrix") {
  ChebPoly t5 = ChebPoly::basis(5);
  std::vector<double> r = t5.real_roots();
  REQUIRE(r.size() == 5);
  for (int k = 0; k < 5; ++k) {
    double expect = std::cos(M_PI * (2 * (5 - k) - 1) / 10.0);
    CHECK(r[k] == doctest::Approx(expect).epsilon(1e-10));
  }

  // (x - 0.25)(x + 0.5) over a shifted interval.
  ChebPoly p = ChebPoly::from_monomial({-0.125, 0.25, 1.0}, {-2.0, 2.0});
  std::vector<double> pr = p.real_roots();
  REQUIRE(pr.size() == 2);
  CHECK(pr[0] == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(pr[1] == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("interpolant hits smooth targets") {
  auto f = [](double x) { return std::exp(-x) * std::sin(2 * x); };
  ChebPoly p = ChebPoly::interpolant(f, 24);
  for (double x : {-1.0, -0.35, 0.0, 0.82, 1.0})
    CHECK(p(x) == doctest::Approx(f(x)).epsilon(1e-11));
}

TEST_CASE("monomial conversion roundtrip stays within 1e-10 to degree 32") {
  // Pure basis vectors, including the worst-conditioned T_32.
  for (int deg : {1, 7, 20, 32}) {
    ChebPoly tk = ChebPoly::basis(deg);
    ChebPoly back = ChebPoly::from_monomial(tk.to_monomial());
    for (int j = 0; j <= deg; ++j) {
      double want = j == deg ? 1.0 : 0.0;
      double got = j < (int)back.coeffs().size() ? back.coeffs()[j] : 0.0;
      CHECK(std::abs(got - want) <= 1e-10);
    }
  }
  // Geometrically decaying coefficient profiles (the shape minimax
  // approximants of analytic targets take); slower decay than (1+sqrt(2))^-k
  // overflows what double monomial storage can carry back at this degree.
  CounterRng rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> c(33);
    for (size_t k = 0; k < c.size(); ++k) c[k] = rng.uniform(-1, 1) * std::pow(3.0, -(double)k);
    ChebPoly p(c, {-1.0, 1.0});
    ChebPoly back = ChebPoly::from_monomial(p.to_monomial(), {-1.0, 1.0});
    double scale = p.max_abs_coeff();
    for (size_t j = 0; j < c.size(); ++j) {
      double got = j < back.coeffs().size() ? back.coeffs()[j] : 0.0;
      CHECK(std::abs(got - c[j]) <= 1e-10 * scale);
    }
  }
  // Off-standard reference intervals at moderate degree: the monomial form on
  // a short interval scales like (2/len)^k 2^k, so double storage of the
  // monomials caps the usable degree well before 32.
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> c(17);
    for (size_t k = 0; k < c.size(); ++k) c[k] = rng.uniform(-1, 1) / (1.0 + 0.3 * k * k);
    ChebPoly p(c, {-0.8, 0.9});
    ChebPoly back = ChebPoly::from_monomial(p.to_monomial(), {-0.8, 0.9});
    double scale = p.max_abs_coeff();
    for (size_t j = 0; j < c.size(); ++j) {
      double got = j < back.coeffs().size() ? back.coeffs()[j] : 0.0;
      CHECK(std::abs(got - c[j]) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("domain invariants") {
  CHECK_THROWS_AS(Domain(std::vector<Interval>{{0.5, 0.2}}), Error);
  CHECK_THROWS_AS(Domain(std::vector<Interval>{{-0.5, 0.2}, {0.1, 0.8}}), Error);
  CHECK_THROWS_AS(Domain(std::vector<Interval>{{-1.5, 0.0}}), Error);
  Domain d(std::vector<Interval>{{0.25, 1.0}, {-1.0, -0.25}});
  CHECK(d.intervals.front().lo == -1.0);
  CHECK(d.hull().hi == 1.0);
  CHECK(d.contains(0.3));
  CHECK(!d.contains(0.0));
  CHECK(d.distance(0.0) == doctest::Approx(0.25));
  CHECK(d.clamp(0.1) == doctest::Approx(0.25));
}

}  // TEST_SUITE
