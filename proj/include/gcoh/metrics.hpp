#pragma once

#include "gcoh/gaussian.hpp"

// Closed-form Uhlmann fidelity, affinity, and the squared Bures /
// Hellinger distances between single-mode Gaussian states.

namespace gcoh {

// Building blocks of the Gaussian fidelity formula:
//   delta    = det(sigma_1 + sigma_2)
//   lambda   = 4 (det sigma_1 - 1/4)(det sigma_2 - 1/4)
//   exponent = -(1/2) dR^T (sigma_1 + sigma_2)^{-1} dR,  dR = R_1 - R_2
// lambda uses the real identity det(sigma + (i/2) Omega) = det sigma - 1/4
// valid for any 2x2 symmetric sigma.
struct FidelityIngredients {
  double delta = 0.0;
  double lambda = 0.0;
  double exponent = 0.0;
};

// Throws std::domain_error if either state fails the physicality check.
FidelityIngredients fidelity_ingredients(const GaussianState& s1,
                                         const GaussianState& s2);

// F = e^{exponent} / (sqrt(delta+lambda) - sqrt(lambda)), in [0,1].
// When lambda >> delta the difference of square roots cancels
// catastrophically; the rationalized form
//   F = e^{exponent} (sqrt(delta+lambda) + sqrt(lambda)) / delta
// is used instead.
double fidelity(const GaussianState& s1, const GaussianState& s2);

// A = 2 e^{exponent} (det sigma_1 det sigma_2)^{1/4} / sqrt(delta).
double affinity(const GaussianState& s1, const GaussianState& s2);

// 2 (1 - sqrt(F)), in [0, 2].
double bures_distance_sq(const GaussianState& s1, const GaussianState& s2);

// 2 (1 - sqrt(A)), in [0, 2].
double hellinger_distance_sq(const GaussianState& s1, const GaussianState& s2);

}  // namespace gcoh
