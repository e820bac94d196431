#include "gcoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gcoh/metrics.hpp"

namespace gcoh {

GaussianState make_family_state(Family f, const FamilyParams& p) {
  switch (f) {
    case Family::STS:
      return sts(p.r, p.n_th, {p.beta, 0.0});
    case Family::CTS:
      return cts({p.beta, 0.0}, p.n_th);
    case Family::TSS:
      return tss(p.r, p.n_th);
    case Family::Generic:
      return from_params({{p.beta, 0.0}, p.r, p.psi, p.n_th});
  }
  throw std::invalid_argument("unknown family");
}

double objective(const GaussianState& s, double ni, Measure m) {
  const GaussianState th = thermal_state(ni);
  return m == Measure::Bures ? std::sqrt(fidelity(s, th))
                             : std::sqrt(affinity(s, th));
}

namespace {

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  long evals = 0;
  bool converged = false;
};

// Golden-section search for a maximum on [lo, hi].
GoldenResult golden_max(const std::function<double(double)>& f, double lo,
                        double hi, const OptimizerOptions& opts) {
  const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_gr * (b - a);
  double d = a + inv_gr * (b - a);
  double fc = f(c), fd = f(d);
  GoldenResult res;
  res.evals = 2;
  for (int i = 0; i < opts.max_iters; ++i) {
    if (b - a <= opts.domain_tol * std::max(1.0, std::abs(b))) {
      res.converged = true;
      break;
    }
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_gr * (b - a);
      fd = f(d);
    }
    ++res.evals;
  }
  if (fc > fd) {
    res.x = c;
    res.fx = fc;
  } else {
    res.x = d;
    res.fx = fd;
  }
  return res;
}

}  // namespace

CoherenceResult maximize_over_thermal(const GaussianState& s, Measure m,
                                      const OptimizerOptions& opts) {
  if (!is_physical(s)) {
    throw std::domain_error("coherence requires a physical state");
  }
  if (!(opts.grid_lo < opts.grid_hi) || opts.points_per_decade < 1) {
    throw std::invalid_argument("bad optimizer options");
  }

  std::vector<double> pts;
  pts.push_back(0.0);
  // The state's own thermal occupation, where interior maxima tend to sit.
  const double heuristic = 0.5 * (s.cov.a + s.cov.b - 1.0);
  if (heuristic > 0.0) pts.push_back(heuristic);
  const double llo = std::log10(opts.grid_lo);
  const double lhi = std::log10(opts.grid_hi);
  const int n = static_cast<int>(std::ceil((lhi - llo) * opts.points_per_decade));
  for (int i = 0; i <= n; ++i) {
    pts.push_back(std::pow(10.0, llo + (lhi - llo) * i / n));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  CoherenceResult res;
  const auto f = [&](double ni) { return objective(s, ni, m); };
  std::vector<double> vals(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    vals[i] = f(pts[i]);
  }
  res.evaluations = static_cast<long>(pts.size());

  // Local maxima of the scan, best first; refine up to three of them so a
  // regime switch in the objective cannot trap the search in a side lobe.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool up = i == 0 || vals[i] >= vals[i - 1];
    const bool down = i + 1 == pts.size() || vals[i] >= vals[i + 1];
    if (up && down) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  if (peaks.size() > 3) peaks.resize(3);

  double best_x = pts[peaks.empty() ? 0 : peaks[0]];
  double best_fx = vals[peaks.empty() ? 0 : peaks[0]];
  bool converged = false;
  for (std::size_t k : peaks) {
    const double lo = k == 0 ? pts[0] : pts[k - 1];
    const double hi = k + 1 == pts.size() ? pts[k] : pts[k + 1];
    if (hi <= lo) continue;
    const GoldenResult g = golden_max(f, lo, hi, opts);
    res.evaluations += g.evals;
    if (g.fx > best_fx) {
      best_x = g.x;
      best_fx = g.fx;
    }
    converged = converged || g.converged;
  }

  res.argmax_ni = best_x;
  res.objective_at_max = best_fx;
  res.value = 1.0 - best_fx;
  res.converged = converged;
  return res;
}

CoherenceResult coherence(const GaussianState& s, Measure m,
                          const OptimizerOptions& opts) {
  return maximize_over_thermal(s, m, opts);
}

namespace {

FamilyParams bind(const FamilyParams& fixed, const std::string& vary,
                  double x) {
  FamilyParams p = fixed;
  if (vary == "r") {
    p.r = x;
  } else if (vary == "beta") {
    p.beta = x;
  } else if (vary == "psi") {
    p.psi = x;
  } else if (vary == "n_th") {
    p.n_th = x;
  } else if (vary == "n_sq") {
    p.r = std::asinh(std::sqrt(x));
  } else if (vary == "n_coh") {
    p.beta = std::sqrt(x);
  } else {
    throw std::invalid_argument("unknown parameter name: " + vary);
  }
  return p;
}

bool is_photon_number(const std::string& vary) {
  return vary == "n_sq" || vary == "n_coh";
}

}  // namespace

ThresholdResult threshold_search(Family family, Measure m, double target,
                                 const FamilyParams& fixed,
                                 const std::string& vary, double lo, double hi,
                                 const OptimizerOptions& opts) {
  if (!(target > 0.0 && target < 1.0)) {
    throw std::invalid_argument("target must be in (0,1)");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("need lo < hi");
  }
  const auto eval = [&](double x) {
    return coherence(make_family_state(family, bind(fixed, vary, x)), m, opts)
        .value;
  };
  const double c_lo = eval(lo);
  const double c_hi = eval(hi);
  const bool increasing = c_hi >= c_lo;

  if (std::max(c_lo, c_hi) < target) {
    return {false, 0.0};  // never reaches target on this bracket
  }
  if (std::min(c_lo, c_hi) >= target) {
    return {true, lo};
  }

  const bool log_scale = is_photon_number(vary) && lo > 0.0;
  double a = lo, b = hi;
  while (b - a > 1e-3 * 0.5 * (std::abs(a) + std::abs(b)) &&
         b - a > 1e-15) {
    const double mid = log_scale ? std::sqrt(a * b) : 0.5 * (a + b);
    const bool above = eval(mid) >= target;
    // keep the sub-interval that still brackets the crossing
    if (above == increasing) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return {true, log_scale ? std::sqrt(a * b) : 0.5 * (a + b)};
}

std::vector<double> default_ladder() {
  return {1e2, 1e3, 1e4, 1e5, 1e6, 1e7};
}

AsymptoteResult asymptote(Family family, const FamilyParams& fixed, Measure m,
                          const std::vector<double>& ladder,
                          const OptimizerOptions& opts) {
  if (ladder.size() < 4 ||
      !std::is_sorted(ladder.begin(), ladder.end(), std::less_equal<>())) {
    throw std::invalid_argument(
        "ladder must be strictly increasing with >= 4 points");
  }
  AsymptoteResult res;
  res.values.reserve(ladder.size());
  for (double n : ladder) {
    FamilyParams p = fixed;
    p.n_th = n;
    res.values.push_back(
        coherence(make_family_state(family, p), m, opts).value);
  }
  const std::size_t k = res.values.size();
  res.plateau = res.values.back();
  res.is_plateau = std::abs(res.values[k - 1] - res.values[k - 2]) < 1e-6;
  return res;
}

}  // namespace gcoh
