#pragma once

#include <string>
#include <vector>

#include "gcoh/gaussian.hpp"

// Coherence as 1 - max over the thermal family of sqrt(F) (Bures) or
// sqrt(A) (Hellinger), plus the threshold search and asymptote ladder
// built on top of it.

namespace gcoh {

enum class Measure { Bures, Hellinger };

enum class Family { STS, CTS, TSS, Generic };

// Real-amplitude parameters for the named state families.
struct FamilyParams {
  double beta = 0.0;
  double r = 0.0;
  double psi = 0.0;  // Generic only
  double n_th = 0.0;
};

GaussianState make_family_state(Family f, const FamilyParams& p);

struct OptimizerOptions {
  double grid_lo = 1e-8;
  double grid_hi = 1e12;
  int points_per_decade = 8;
  double value_tol = 1e-12;
  double domain_tol = 1e-10;
  int max_iters = 200;
};

struct CoherenceResult {
  double value = 0.0;           // 1 - objective_at_max, in [0, 1)
  double argmax_ni = 0.0;       // maximizing incoherent thermal occupation
  double objective_at_max = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// sqrt(F(s, thermal(ni))) for Bures, sqrt(A(s, thermal(ni))) for Hellinger.
double objective(const GaussianState& s, double ni, Measure m);

// Global scan over a log-spaced ni grid (plus the boundary ni = 0 and the
// heuristic candidate ni = (a+b-1)/2) followed by golden-section refinement
// of the best brackets.
CoherenceResult maximize_over_thermal(const GaussianState& s, Measure m,
                                      const OptimizerOptions& opts = {});

CoherenceResult coherence(const GaussianState& s, Measure m,
                          const OptimizerOptions& opts = {});

struct ThresholdResult {
  bool reached = false;
  double value = 0.0;
};

// Bisection for the parameter value where coherence crosses `target`,
// varying one parameter of a state family. Photon-number parameters
// ("n_sq" = sinh^2 r, "n_coh" = beta^2) are bisected in log scale.
// Returns reached = false when even the favorable endpoint stays below
// target. Throws std::invalid_argument on an unusable bracket.
ThresholdResult threshold_search(Family family, Measure m, double target,
                                 const FamilyParams& fixed,
                                 const std::string& vary, double lo, double hi,
                                 const OptimizerOptions& opts = {});

struct AsymptoteResult {
  std::vector<double> values;
  double plateau = 0.0;
  bool is_plateau = false;
};

// Evaluates coherence along a strictly increasing n_th ladder and reports
// whether the last two values agree to 1e-6 absolute.
AsymptoteResult asymptote(Family family, const FamilyParams& fixed, Measure m,
                          const std::vector<double>& ladder,
                          const OptimizerOptions& opts = {});

std::vector<double> default_ladder();

}  // namespace gcoh
