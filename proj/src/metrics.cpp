#include "gcoh/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gcoh {

namespace {

constexpr double kClampSlack = 1e-12;

// det sigma - 1/4 can dip a hair below zero for pure states built from
// transcendental parameters; small negatives are rounded up.
double det_minus_quarter(const CovarianceMatrix& cov) {
  const double v = cov.det() - 0.25;
  if (v < 0.0) {
    if (v < -kClampSlack) {
      throw std::domain_error("covariance matrix violates det sigma >= 1/4");
    }
    return 0.0;
  }
  return v;
}

double clamp_unit(double v, const char* what) {
  if (v > 1.0) {
    if (v > 1.0 + kClampSlack) {
      throw std::domain_error(std::string(what) + " exceeds 1 beyond slack");
    }
    return 1.0;
  }
  if (v < 0.0) {
    return 0.0;
  }
  return v;
}

}  // namespace

FidelityIngredients fidelity_ingredients(const GaussianState& s1,
                                         const GaussianState& s2) {
  if (!is_physical(s1) || !is_physical(s2)) {
    throw std::domain_error("fidelity requires physical states");
  }
  const double sa = s1.cov.a + s2.cov.a;
  const double sb = s1.cov.b + s2.cov.b;
  const double sc = s1.cov.c + s2.cov.c;
  const double dsum = sa * sb - sc * sc;

  FidelityIngredients ing;
  ing.delta = dsum;
  ing.lambda = 4.0 * det_minus_quarter(s1.cov) * det_minus_quarter(s2.cov);

  const double dx = s1.mean.x - s2.mean.x;
  const double dp = s1.mean.p - s2.mean.p;
  // 2x2 inverse by adjugate: (sigma1+sigma2)^{-1} = [[sb,-sc],[-sc,sa]]/dsum
  ing.exponent = -0.5 * (dx * dx * sb - 2.0 * dx * dp * sc + dp * dp * sa) / dsum;
  return ing;
}

double fidelity(const GaussianState& s1, const GaussianState& s2) {
  const FidelityIngredients ing = fidelity_ingredients(s1, s2);
  const double root_sum = std::sqrt(ing.delta + ing.lambda);
  const double root_lambda = std::sqrt(ing.lambda);
  double f;
  if (ing.lambda > 1e8 * ing.delta) {
    f = std::exp(ing.exponent) * (root_sum + root_lambda) / ing.delta;
  } else {
    const double denom = root_sum - root_lambda;
    if (denom <= 0.0) {
      throw std::domain_error("fidelity denominator collapsed");
    }
    f = std::exp(ing.exponent) / denom;
  }
  return clamp_unit(f, "fidelity");
}

double affinity(const GaussianState& s1, const GaussianState& s2) {
  const FidelityIngredients ing = fidelity_ingredients(s1, s2);
  const double a = 2.0 * std::exp(ing.exponent) *
                   std::pow(s1.cov.det() * s2.cov.det(), 0.25) /
                   std::sqrt(ing.delta);
  return clamp_unit(a, "affinity");
}

double bures_distance_sq(const GaussianState& s1, const GaussianState& s2) {
  return 2.0 * (1.0 - std::sqrt(fidelity(s1, s2)));
}

double hellinger_distance_sq(const GaussianState& s1, const GaussianState& s2) {
  return 2.0 * (1.0 - std::sqrt(affinity(s1, s2)));
}

}  // namespace gcoh
