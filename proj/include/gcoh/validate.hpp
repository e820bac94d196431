#pragma once

#include "gcoh/fock.hpp"

// Oracle-equivalence suite: compares the closed-form fidelity and affinity
// against spectral Fock-space counterparts over a fixed parameter grid.
// Every comparison is run at `dim` and 2*dim; the reported deviations use
// the 2*dim values, and the two cutoffs must agree to 1e-5 per quantity
// (observed convergence is fast enough that agreement at 1e-5 puts the
// 2*dim truncation error well below the 1e-6 comparison tolerance).

namespace gcoh {

enum class ValidationGrid { Default, ThermalOnly };

struct ValidationReport {
  // |closed fidelity - Uhlmann spectral fidelity|
  double max_fidelity_dev = 0.0;
  // |closed affinity - Tr[sqrt(rho) sqrt(sigma)]|. Large (~0.16) on any grid
  // with mixed states: the closed form is the normalized Hilbert-Schmidt
  // overlap and coincides with Tr[sqrt(rho) sqrt(sigma)] only for pure
  // states (or equal symplectic eigenvalues with equal means).
  double max_affinity_dev = 0.0;
  // |closed affinity - Tr[rho sigma]/sqrt(Tr[rho^2] Tr[sigma^2])|: the
  // spectral quantity the closed form actually computes.
  double max_overlap_dev = 0.0;
  int comparisons = 0;
};

// Throws fock::OracleError when any spectral value fails the dim vs 2*dim
// convergence check. `dim` is the base cutoff; 2*dim matrices are built
// internally.
ValidationReport validate_oracle(int dim, ValidationGrid grid);

}  // namespace gcoh
