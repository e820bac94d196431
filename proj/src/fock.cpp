#include "gcoh/fock.hpp"

#include <cmath>
#include <string>

namespace gcoh::fock {

namespace {

void check_spec(const TruncationSpec& spec) {
  if (spec.dim < 8) {
    throw std::invalid_argument("Fock cutoff dim must be >= 8");
  }
  if (!(spec.tail_tol > 0.0)) {
    throw std::invalid_argument("tail_tol must be > 0");
  }
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

// sqrt of a Hermitian PSD matrix; eigenvalues below -1e-10 are rejected,
// the rest clipped to zero.
Matrix sqrtm_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m));
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev[i] < -1e-10) {
      throw OracleError("matrix square root: eigenvalue " +
                        std::to_string(ev[i]) + " below tolerance");
    }
    ev[i] = std::sqrt(std::max(ev[i], 0.0));
  }
  return es.eigenvectors() * ev.asDiagonal() *
         es.eigenvectors().adjoint();
}


Matrix annihilation(const TruncationSpec& spec) {
  check_spec(spec);
  Matrix a = Matrix::Zero(spec.dim, spec.dim);
  for (int n = 1; n < spec.dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Matrix expm(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Matrix x = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 64; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) {
    sum = sum * sum;
  }
  return sum;
}

FockDensity thermal_density(double n_th, const TruncationSpec& spec) {
  check_spec(spec);
  if (!(n_th >= 0.0) || !std::isfinite(n_th)) {
    throw std::invalid_argument("n_th must be finite and >= 0");
  }
  const double q = n_th / (1.0 + n_th);
  FockDensity d;
  d.tail_mass = std::pow(q, spec.dim);
  if (d.tail_mass > spec.tail_tol) {
    const int needed = static_cast<int>(
        std::ceil(std::log(spec.tail_tol) / std::log(q)));
    throw OracleError("thermal tail mass " + std::to_string(d.tail_mass) +
                      " exceeds tolerance; need dim >= " +
                      std::to_string(needed));
  }
  Eigen::VectorXd p(spec.dim);
  for (int n = 0; n < spec.dim; ++n) {
    p[n] = std::pow(q, n) * (1.0 - q);
  }
  p /= p.sum();
  d.rho = p.cast<std::complex<double>>().asDiagonal();
  return d;
}

Matrix displacement_op(std::complex<double> beta, const TruncationSpec& spec) {
  const Matrix a = annihilation(spec);
  return expm(beta * a.adjoint() - std::conj(beta) * a);
}

Matrix squeeze_op(double r, double psi, const TruncationSpec& spec) {
  const Matrix a = annihilation(spec);
  const std::complex<double> xi = std::polar(r, psi);
  const Matrix a2 = a * a;
  return expm(0.5 * xi * a2.adjoint() - 0.5 * std::conj(xi) * a2);
}

FockDensity gaussian_density(const StateParams& p, const TruncationSpec& spec) {
  FockDensity nu = thermal_density(p.n_th, spec);
  const Matrix u = displacement_op({p.beta.re, p.beta.im}, spec) *
                   squeeze_op(p.r, p.psi, spec);
  FockDensity d;
  d.tail_mass = nu.tail_mass;
  d.rho = hermitize(u * nu.rho * u.adjoint());
  d.rho /= d.rho.trace().real();
  return d;
}

double uhlmann_fidelity(const FockDensity& rho, const FockDensity& sigma) {
  if (rho.rho.rows() != sigma.rho.rows()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const Matrix root = sqrtm_psd(rho.rho);
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      hermitize(root * sigma.rho * root));
  double trace = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()[i];
    if (ev < -1e-10) {
      throw OracleError("fidelity core matrix not PSD");
    }
    trace += std::sqrt(std::max(ev, 0.0));
  }
  return trace * trace;
}

double affinity_fock(const FockDensity& rho, const FockDensity& sigma) {
  if (rho.rho.rows() != sigma.rho.rows()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const std::complex<double> tr =
      (sqrtm_psd(rho.rho) * sqrtm_psd(sigma.rho)).trace();
  if (std::abs(tr.imag()) > 1e-10) {
    throw OracleError("affinity trace has imaginary residue");
  }
  return tr.real();
}

double hs_overlap_fock(const FockDensity& rho, const FockDensity& sigma) {
  if (rho.rho.rows() != sigma.rho.rows()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const double num = (rho.rho * sigma.rho).trace().real();
  const double den = std::sqrt((rho.rho * rho.rho).trace().real() *
                               (sigma.rho * sigma.rho).trace().real());
  return num / den;
}

double converged_value(const std::function<double(const TruncationSpec&)>& f,
                       const TruncationSpec& spec) {
  check_spec(spec);
  const double v1 = f(spec);
  const double v2 = f({2 * spec.dim, spec.tail_tol});
  if (std::abs(v1 - v2) < 1e-7) return v2;
  const double v4 = f({4 * spec.dim, spec.tail_tol});
  if (std::abs(v2 - v4) < 1e-7) return v4;
  throw OracleError("value did not converge by dim " +
                    std::to_string(4 * spec.dim));
}

}  // namespace gcoh::fock
