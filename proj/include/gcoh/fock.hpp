#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>

#include "gcoh/gaussian.hpp"

// Brute-force cross-check: the same states built as truncated Fock-basis
// density matrices, with fidelity and affinity computed spectrally. Valid
// only while the recorded truncation tail mass stays below tail_tol; the
// intended regime is |beta| <= 2, r <= 1, n_th <= 2.

namespace gcoh::fock {

using Matrix = Eigen::MatrixXcd;

struct TruncationSpec {
  int dim = 160;
  double tail_tol = 1e-10;
};

struct FockDensity {
  Matrix rho;
  double tail_mass = 0.0;
};

// Thrown when a truncated computation cannot be trusted at the given dim.
struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ladder operator, a|n> = sqrt(n)|n-1>.
Matrix annihilation(const TruncationSpec& spec);

// Square root of a Hermitian PSD matrix via eigendecomposition.
// Eigenvalues below -1e-10 are an error; small negatives are clipped to 0.
Matrix sqrtm_psd(const Matrix& m);

// Scaling-and-squaring matrix exponential with a Taylor series kernel.
Matrix expm(const Matrix& a);

// Geometric Fock distribution, truncated then renormalized to unit trace.
FockDensity thermal_density(double n_th, const TruncationSpec& spec);

// exp(beta a^dag - conj(beta) a)
Matrix displacement_op(std::complex<double> beta, const TruncationSpec& spec);

// exp((xi/2) a^dag^2 - (conj(xi)/2) a^2), xi = r e^{i psi}
Matrix squeeze_op(double r, double psi, const TruncationSpec& spec);

// D S nu S^dag D^dag, renormalized.
FockDensity gaussian_density(const StateParams& p, const TruncationSpec& spec);

// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 via Hermitian eigendecomposition.
double uhlmann_fidelity(const FockDensity& rho, const FockDensity& sigma);

// Tr[sqrt(rho) sqrt(sigma)]
double affinity_fock(const FockDensity& rho, const FockDensity& sigma);

// Purity-normalized Hilbert-Schmidt overlap
// Tr[rho sigma] / sqrt(Tr[rho^2] Tr[sigma^2]). For pure states this equals
// Tr[sqrt(rho) sqrt(sigma)]; for mixed states the two differ, and it is this
// overlap -- not Tr[sqrt(rho) sqrt(sigma)] -- that the closed-form affinity
// of MODULE metrics reproduces (see tests and README).
double hs_overlap_fock(const FockDensity& rho, const FockDensity& sigma);

// Runs the computation at dim and 2*dim; accepts when the results agree to
// 1e-7, otherwise retries once at 4*dim. Throws OracleError on
// non-convergence.
double converged_value(const std::function<double(const TruncationSpec&)>& f,
                       const TruncationSpec& spec);

}  // namespace gcoh::fock
