#include "gcoh/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace gcoh {

namespace {

bool finite(double v) { return std::isfinite(v); }

void check_params(const StateParams& p) {
  if (!finite(p.beta.re) || !finite(p.beta.im) || !finite(p.r) ||
      !finite(p.psi) || !finite(p.n_th)) {
    throw std::invalid_argument("state parameters must be finite");
  }
  if (p.r < 0.0) {
    throw std::invalid_argument("squeezing magnitude r must be >= 0");
  }
  if (p.n_th < 0.0) {
    throw std::invalid_argument("thermal photon number n_th must be >= 0");
  }
}

}  // namespace

GaussianState from_params(const StateParams& p) {
  check_params(p);
  const double u = 0.5 * (1.0 + 2.0 * p.n_th);
  const double k = std::cos(p.psi);
  const double ep = std::exp(2.0 * p.r);
  const double em = std::exp(-2.0 * p.r);
  GaussianState s;
  s.mean.x = std::sqrt(2.0) * p.beta.re;
  s.mean.p = std::sqrt(2.0) * p.beta.im;
  // cosh(2r) +- k sinh(2r) written as a positive-weight sum of e^{+-2r},
  // so b stays accurate at large r instead of cancelling to zero
  s.cov.a = u * 0.5 * ((1.0 + k) * ep + (1.0 - k) * em);
  s.cov.b = u * 0.5 * ((1.0 - k) * ep + (1.0 + k) * em);
  s.cov.c = u * std::sin(p.psi) * 0.5 * (ep - em);
  return s;
}

GaussianState thermal_state(double n) {
  return from_params({{0.0, 0.0}, 0.0, 0.0, n});
}

GaussianState sts(double r, double n_th, ComplexAmplitude beta) {
  return from_params({beta, r, 0.0, n_th});
}

GaussianState cts(ComplexAmplitude beta, double n_th) {
  return from_params({beta, 0.0, 0.0, n_th});
}

GaussianState tss(double r, double n_th) {
  check_params({{0.0, 0.0}, r, 0.0, n_th});
  GaussianState s;
  s.cov.a = n_th + std::exp(2.0 * r);
  s.cov.b = n_th + std::exp(-2.0 * r);
  s.cov.c = 0.0;
  return s;
}

bool is_physical(const GaussianState& s) {
  return s.cov.a > 0.0 && s.cov.b > 0.0 &&
         s.cov.det() >= 0.25 - kPhysicalityEps;
}

bool is_incoherent(const GaussianState& s, double eps) {
  return std::abs(s.mean.x) <= eps && std::abs(s.mean.p) <= eps &&
         std::abs(s.cov.c) <= eps && std::abs(s.cov.a - s.cov.b) <= eps;
}

}  // namespace gcoh
