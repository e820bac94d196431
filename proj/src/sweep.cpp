#include "gcoh/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace gcoh {

namespace {

const char* const kVaryNames[] = {"r", "beta", "psi", "n_th", "n_sq", "n_coh"};

std::vector<double> grid_points(const SweepSpec& spec) {
  bool known = false;
  for (const char* name : kVaryNames) {
    known = known || spec.vary == name;
  }
  if (!known) {
    throw std::invalid_argument("unknown sweep parameter: " + spec.vary);
  }
  if (!(spec.from < spec.to)) {
    throw std::invalid_argument("sweep requires from < to");
  }
  if (spec.points < 2) {
    throw std::invalid_argument("sweep requires points >= 2");
  }
  if (spec.log_scale && !(spec.from > 0.0)) {
    throw std::invalid_argument("log scale requires from > 0");
  }
  std::vector<double> xs(spec.points);
  const double lo = spec.log_scale ? std::log10(spec.from) : spec.from;
  const double hi = spec.log_scale ? std::log10(spec.to) : spec.to;
  for (int i = 0; i < spec.points; ++i) {
    const double t = lo + (hi - lo) * i / (spec.points - 1);
    xs[i] = spec.log_scale ? std::pow(10.0, t) : t;
  }
  return xs;
}

FamilyParams bind_varied(const SweepSpec& spec, double x) {
  FamilyParams p = spec.fixed;
  if (spec.vary == "r") {
    p.r = x;
  } else if (spec.vary == "beta") {
    p.beta = x;
  } else if (spec.vary == "psi") {
    p.psi = x;
  } else if (spec.vary == "n_th") {
    p.n_th = x;
  } else if (spec.vary == "n_sq") {
    p.r = std::asinh(std::sqrt(x));
  } else if (spec.vary == "n_coh") {
    p.beta = std::sqrt(x);
  } else {
    throw std::invalid_argument("unknown sweep parameter: " + spec.vary);
  }
  return p;
}

SweepRow eval_row(const SweepSpec& spec, const OptimizerOptions& opts,
                  double x) {
  SweepRow row;
  row.varied_value = x;
  try {
    const GaussianState s =
        make_family_state(spec.family, bind_varied(spec, x));
    if (spec.bures) {
      const CoherenceResult r = coherence(s, Measure::Bures, opts);
      row.c_bures = r.value;
      row.argmax_ni_bures = r.argmax_ni;
    }
    if (spec.hellinger) {
      const CoherenceResult r = coherence(s, Measure::Hellinger, opts);
      row.c_hellinger = r.value;
      row.argmax_ni_hellinger = r.argmax_ni;
    }
  } catch (const std::exception&) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.failed = true;
    if (spec.bures) {
      row.c_bures = nan;
      row.argmax_ni_bures = nan;
    }
    if (spec.hellinger) {
      row.c_hellinger = nan;
      row.argmax_ni_hellinger = nan;
    }
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const OptimizerOptions& opts, ExecMode mode) {
  const std::vector<double> xs = grid_points(spec);
  std::vector<SweepRow> rows(xs.size());
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
      rows[i] = eval_row(spec, opts, xs[i]);
    }
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      rows[i] = eval_row(spec, opts, xs[i]);
    }
  }
  return rows;
}

namespace {

std::string field(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", *v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "varied,c_bures,c_hellinger,argmax_ni_bures,argmax_ni_hellinger\n";
  char buf[32];
  for (const SweepRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%.11e", row.varied_value);
    out << buf << ',' << field(row.c_bures) << ',' << field(row.c_hellinger)
        << ',' << field(row.argmax_ni_bures) << ','
        << field(row.argmax_ni_hellinger) << '\n';
  }
}

}  // namespace gcoh
