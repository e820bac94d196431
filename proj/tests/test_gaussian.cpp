#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gcoh/gaussian.hpp"

using namespace gcoh;

TEST_CASE("from_params: vacuum") {
  const GaussianState s = from_params({});
  CHECK(s.mean.x == 0.0);
  CHECK(s.mean.p == 0.0);
  CHECK(s.cov.a == doctest::Approx(0.5));
  CHECK(s.cov.b == doctest::Approx(0.5));
  CHECK(s.cov.c == 0.0);
}

TEST_CASE("from_params: squeezed vacuum r=1") {
  // cosh(2r) +- sinh(2r) = e^{+-2r}
  const GaussianState s = from_params({{0, 0}, 1.0, 0.0, 0.0});
  CHECK(s.cov.a == doctest::Approx(std::exp(2.0) / 2.0).epsilon(1e-12));
  CHECK(s.cov.b == doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-12));
  CHECK(s.cov.c == doctest::Approx(0.0));
}

TEST_CASE("from_params: psi = pi/2 rotates squeezing into the off-diagonal") {
  const GaussianState s =
      from_params({{0, 0}, 0.5, std::numbers::pi / 2.0, 1.0});
  CHECK(s.cov.a == doctest::Approx(1.5 * std::cosh(1.0)).epsilon(1e-12));
  CHECK(s.cov.b == doctest::Approx(1.5 * std::cosh(1.0)).epsilon(1e-12));
  CHECK(s.cov.c == doctest::Approx(1.5 * std::sinh(1.0)).epsilon(1e-12));
}

TEST_CASE("from_params rejects bad input") {
  CHECK_THROWS_AS(from_params({{0, 0}, -0.1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(from_params({{0, 0}, 0, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(from_params({{NAN, 0}, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(from_params({{0, 0}, 0, INFINITY, 0}),
                  std::invalid_argument);
}

TEST_CASE("thermal_state") {
  for (double n : {0.0, 1.0, 2.0}) {
    const GaussianState s = thermal_state(n);
    CHECK(s.cov.a == doctest::Approx((1 + 2 * n) / 2).epsilon(1e-15));
    CHECK(s.cov.b == s.cov.a);
    CHECK(s.cov.c == 0.0);
    CHECK(s.mean.x == 0.0);
  }
  CHECK_THROWS_AS(thermal_state(-0.5), std::invalid_argument);
}

TEST_CASE("sts builder") {
  GaussianState s = sts(1.0, 2.0);
  CHECK(s.cov.a == doctest::Approx(2.5 * std::exp(2.0)).epsilon(1e-12));
  CHECK(s.cov.b == doctest::Approx(2.5 * std::exp(-2.0)).epsilon(1e-12));
  CHECK(s.cov.c == doctest::Approx(0.0));

  s = sts(1.0, 0.0, {1.0, 0.0});
  CHECK(s.mean.x == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.mean.p == 0.0);
  CHECK(s.cov.a == doctest::Approx(std::exp(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("cts builder") {
  GaussianState s = cts({0, 0}, 1.0);
  const GaussianState th = thermal_state(1.0);
  CHECK(s.cov.a == th.cov.a);
  CHECK(s.cov.b == th.cov.b);

  s = cts({1, 0}, 0.0);
  CHECK(s.mean.x == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.cov.a == doctest::Approx(0.5));

  s = cts({2, 0}, 2.0);
  CHECK(s.mean.x == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK(s.cov.a == doctest::Approx(2.5));
  CHECK(s.cov.b == doctest::Approx(2.5));
}

TEST_CASE("tss builder is the literal diag(n + e^{2r}, n + e^{-2r})") {
  GaussianState s = tss(0.0, 0.0);
  CHECK(s.cov.a == 1.0);  // not the vacuum 1/2: different normalization
  CHECK(s.cov.b == 1.0);

  s = tss(1.0, 1.0);
  CHECK(s.cov.a == doctest::Approx(1.0 + std::exp(2.0)).epsilon(1e-12));
  CHECK(s.cov.b == doctest::Approx(1.0 + std::exp(-2.0)).epsilon(1e-12));

  s = tss(0.0, 3.0);
  CHECK(s.cov.a == 4.0);
  CHECK(s.cov.b == 4.0);
  CHECK(is_physical(s));
}

TEST_CASE("is_physical") {
  CHECK(is_physical(thermal_state(0.0)));
  GaussianState bad;
  bad.cov = {0.1, 0.1, 0.0};
  CHECK_FALSE(is_physical(bad));
}

TEST_CASE("is_incoherent") {
  CHECK(is_incoherent(thermal_state(2.0)));
  CHECK_FALSE(is_incoherent(sts(0.1, 0.0)));
  CHECK(is_incoherent(cts({1e-14, 0}, 1.0), 1e-9));
}

TEST_CASE("covariance identities over a parameter grid") {
  // r capped at 2: the det identity itself amplifies roundoff as e^{4r}
  for (double r : {0.0, 0.1, 1.0, 2.0}) {
    for (double psi : {0.0, 0.7, 2.0, 5.5}) {
      for (double n_th : {0.0, 0.5, 1.0, 5.0}) {
        const GaussianState s = from_params({{0.3, -0.2}, r, psi, n_th});
        const double u = (1 + 2 * n_th) / 2;
        CHECK(s.cov.a + s.cov.b ==
              doctest::Approx(2 * u * std::cosh(2 * r)).epsilon(1e-12));
        CHECK(s.cov.det() == doctest::Approx(u * u).epsilon(1e-12));
        CHECK(is_physical(s));
      }
    }
  }
}

TEST_CASE("incoherent iff beta = 0 and r = 0") {
  for (double beta : {0.0, 0.1, 1.0}) {
    for (double r : {0.0, 0.1, 1.0}) {
      for (double n_th : {0.0, 1.0, 5.0}) {
        const GaussianState s = from_params({{beta, 0}, r, 0.0, n_th});
        CHECK(is_incoherent(s) == (beta == 0.0 && r == 0.0));
      }
    }
  }
}

TEST_CASE("family builders agree at zero squeezing/displacement") {
  for (double n : {0.0, 0.7, 3.0}) {
    const GaussianState t = thermal_state(n);
    const GaussianState c = cts({0, 0}, n);
    const GaussianState s = sts(0.0, n);
    CHECK(t.cov.a == c.cov.a);
    CHECK(t.cov.a == s.cov.a);
    CHECK(t.cov.b == s.cov.b);
    CHECK(t.cov.c == c.cov.c);
  }
}
