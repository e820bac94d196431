#pragma once

#include <cmath>

// Phase-space description of single-mode Gaussian states.
//
// Conventions: hbar = 1, vacuum covariance matrix (1/2)*I, symplectic form
// Omega = [[0,1],[-1,0]]. A state is fully described by its first-moment
// vector R = sqrt(2)*(Re beta, Im beta) and a 2x2 symmetric covariance
// matrix sigma = [[a,c],[c,b]].

namespace gcoh {

struct ComplexAmplitude {
  double re = 0.0;
  double im = 0.0;
};

// Physical parametrization (displacement, squeezing magnitude/phase,
// mean thermal photon number).
struct StateParams {
  ComplexAmplitude beta;
  double r = 0.0;
  double psi = 0.0;
  double n_th = 0.0;
};

struct PhaseSpaceVector {
  double x = 0.0;
  double p = 0.0;
};

// sigma = [[a, c], [c, b]]; symmetry is structural.
struct CovarianceMatrix {
  double a = 0.5;
  double b = 0.5;
  double c = 0.0;

  double det() const { return a * b - c * c; }
};

struct GaussianState {
  PhaseSpaceVector mean;
  CovarianceMatrix cov;
};

// Tolerance on det sigma >= 1/4 in the physicality check.
inline constexpr double kPhysicalityEps = 1e-12;

// Default absolute tolerance for the incoherence classifier.
inline constexpr double kIncoherenceEps = 1e-9;

// General builder: R and sigma from the physical parameters.
// Throws std::invalid_argument on non-finite input or negative r / n_th.
GaussianState from_params(const StateParams& p);

// Thermal state: R = 0, sigma = ((1+2n)/2)*I. The only incoherent
// single-mode Gaussian states.
GaussianState thermal_state(double n);

// Squeezed thermal state (real squeezing, optional displacement):
// sigma = ((1+2n_th)/2) * diag(e^{2r}, e^{-2r}).
GaussianState sts(double r, double n_th, ComplexAmplitude beta = {});

// Coherent thermal state: displaced thermal state.
GaussianState cts(ComplexAmplitude beta, double n_th);

// Thermal squeezed state, sigma = diag(n_th + e^{2r}, n_th + e^{-2r}).
// Note: this family is defined with a different covariance normalization
// than the rest of the toolbox; its r = 0, n_th = 0 member is sigma = I,
// not the vacuum (1/2)*I. The matrix is physical either way.
GaussianState tss(double r, double n_th);

// One-mode uncertainty condition: a > 0, b > 0, det sigma >= 1/4 - eps.
bool is_physical(const GaussianState& s);

// True iff the state is a thermal state within absolute tolerance eps:
// zero mean, zero off-diagonal, a == b.
bool is_incoherent(const GaussianState& s, double eps = kIncoherenceEps);

}  // namespace gcoh
