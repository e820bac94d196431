#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "gcoh/coherence.hpp"
#include "gcoh/sweep.hpp"
#include "gcoh/validate.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitPartialSweep = 4;
constexpr int kExitValidation = 5;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

gcoh::Family parse_family(const std::string& s) {
  if (s == "sts") return gcoh::Family::STS;
  if (s == "cts") return gcoh::Family::CTS;
  if (s == "tss") return gcoh::Family::TSS;
  if (s == "generic") return gcoh::Family::Generic;
  throw CLI::ValidationError("--family", "unknown family: " + s);
}

gcoh::Measure parse_measure(const std::string& s) {
  if (s == "bures") return gcoh::Measure::Bures;
  if (s == "hellinger") return gcoh::Measure::Hellinger;
  throw CLI::ValidationError("--measure", "unknown measure: " + s);
}

const char* family_name(gcoh::Family f) {
  switch (f) {
    case gcoh::Family::STS: return "sts";
    case gcoh::Family::CTS: return "cts";
    case gcoh::Family::TSS: return "tss";
    default: return "generic";
  }
}

// Shared per-subcommand state: family parameters, optimizer options, and
// the flat key=value config file that may override the defaults.
struct CommonArgs {
  std::string family = "sts";
  double r = 0.0;
  double psi = 0.0;
  double beta = 0.0;
  double n_th = 0.0;
  double n_sq = -1.0;
  double n_coh = -1.0;
  std::string config;
  gcoh::OptimizerOptions opts;
  int dim = 160;

  gcoh::FamilyParams params() const {
    gcoh::FamilyParams p;
    p.r = n_sq >= 0.0 ? std::asinh(std::sqrt(n_sq)) : r;
    p.beta = n_coh >= 0.0 ? std::sqrt(n_coh) : beta;
    p.psi = psi;
    p.n_th = n_th;
    return p;
  }
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--family", a.family, "State family: sts|cts|tss|generic");
  cmd->add_option("--r", a.r, "Squeezing magnitude");
  cmd->add_option("--psi", a.psi, "Squeezing phase (generic family)");
  cmd->add_option("--beta", a.beta, "Displacement amplitude (real)");
  cmd->add_option("--n-th", a.n_th, "Mean thermal photon number");
  cmd->add_option("--n-sq", a.n_sq, "Squeezing photon number sinh^2 r");
  cmd->add_option("--n-coh", a.n_coh, "Coherent photon number beta^2");
  cmd->add_option("--config", a.config,
                  "key=value file overriding optimizer/oracle defaults");
}

void apply_config(CommonArgs& a) {
  if (a.config.empty()) return;
  std::ifstream in(a.config);
  if (!in) {
    throw CLI::ValidationError("--config", "cannot open " + a.config);
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", "expected key=value: " + line);
    }
    const std::string key = line.substr(0, eq);
    const double val = std::stod(line.substr(eq + 1));
    if (key == "grid_lo") {
      a.opts.grid_lo = val;
    } else if (key == "grid_hi") {
      a.opts.grid_hi = val;
    } else if (key == "points_per_decade") {
      a.opts.points_per_decade = static_cast<int>(val);
    } else if (key == "value_tol") {
      a.opts.value_tol = val;
    } else if (key == "domain_tol") {
      a.opts.domain_tol = val;
    } else if (key == "max_iters") {
      a.opts.max_iters = static_cast<int>(val);
    } else if (key == "dim") {
      a.dim = static_cast<int>(val);
    } else {
      throw CLI::ValidationError("--config", "unknown key: " + key);
    }
  }
}

std::string params_json(const gcoh::FamilyParams& p) {
  return "{\"beta\": " + num(p.beta) + ", \"r\": " + num(p.r) +
         ", \"psi\": " + num(p.psi) + ", \"n_th\": " + num(p.n_th) + "}";
}

int run_coherence(const CommonArgs& a, const std::string& measure) {
  const gcoh::Family fam = parse_family(a.family);
  const gcoh::Measure m = parse_measure(measure);
  const gcoh::FamilyParams p = a.params();
  const gcoh::CoherenceResult res =
      gcoh::coherence(gcoh::make_family_state(fam, p), m, a.opts);
  std::cout << "{\"family\": \"" << family_name(fam)
            << "\", \"params\": " << params_json(p) << ", \"measure\": \""
            << measure << "\", \"coherence\": " << num(res.value)
            << ", \"argmax_ni\": " << num(res.argmax_ni)
            << ", \"converged\": " << (res.converged ? "true" : "false")
            << "}\n";
  return res.converged ? 0 : kExitConvergence;
}

int run_sweep_cmd(const CommonArgs& a, gcoh::SweepSpec spec,
                  const std::string& measures, const std::string& out_path) {
  spec.family = parse_family(a.family);
  spec.fixed = a.params();
  spec.bures = measures.find("bures") != std::string::npos;
  spec.hellinger = measures.find("hellinger") != std::string::npos;
  if (!spec.bures && !spec.hellinger) {
    throw CLI::ValidationError("--measures", "no known measure in: " + measures);
  }
  const auto rows = gcoh::run_sweep(spec, a.opts);
  std::ofstream out(out_path);
  if (!out) {
    throw CLI::ValidationError("--out", "cannot open " + out_path);
  }
  gcoh::write_csv(out, rows);
  for (const auto& row : rows) {
    if (row.failed) return kExitPartialSweep;
  }
  return 0;
}

int run_threshold(const CommonArgs& a, const std::string& measure,
                  double target, const std::string& vary, double lo,
                  double hi) {
  const gcoh::ThresholdResult res =
      gcoh::threshold_search(parse_family(a.family), parse_measure(measure),
                             target, a.params(), vary, lo, hi, a.opts);
  if (res.reached) {
    std::cout << "{\"threshold\": " << num(res.value) << "}\n";
  } else {
    std::cout << "{\"threshold\": \"never\"}\n";
  }
  return 0;
}

int run_asymptote(const CommonArgs& a, const std::string& measure,
                  std::vector<double> ladder) {
  if (ladder.empty()) ladder = gcoh::default_ladder();
  const gcoh::AsymptoteResult res =
      gcoh::asymptote(parse_family(a.family), a.params(),
                      parse_measure(measure), ladder, a.opts);
  std::cout << "{\"values\": [";
  for (std::size_t i = 0; i < res.values.size(); ++i) {
    std::cout << (i ? ", " : "") << num(res.values[i]);
  }
  std::cout << "], \"plateau\": " << num(res.plateau)
            << ", \"is_plateau\": " << (res.is_plateau ? "true" : "false")
            << "}\n";
  return 0;
}

int run_validate(const CommonArgs& a, const std::string& grid) {
  gcoh::ValidationGrid g;
  if (grid == "default") {
    g = gcoh::ValidationGrid::Default;
  } else if (grid == "thermal") {
    g = gcoh::ValidationGrid::ThermalOnly;
  } else {
    throw CLI::ValidationError("--grid", "unknown grid: " + grid);
  }
  const gcoh::ValidationReport rep = gcoh::validate_oracle(a.dim, g);
  std::cout << "max |fidelity closed - spectral| = " << num(rep.max_fidelity_dev)
            << "\nmax |affinity closed - Tr[sqrt(rho)sqrt(sigma)]| = "
            << num(rep.max_affinity_dev)
            << "\nmax |affinity closed - normalized HS overlap| = "
            << num(rep.max_overlap_dev) << "\ncomparisons = "
            << rep.comparisons << "\n";
  return (rep.max_fidelity_dev < 1e-6 && rep.max_affinity_dev < 1e-6 &&
          rep.max_overlap_dev < 1e-6)
             ? 0
             : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric coherence measures for single-mode Gaussian states"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string measure = "bures";
  std::string measures = "bures,hellinger";
  std::string out_path = "sweep.csv";
  std::string grid = "default";
  std::string vary = "r";
  double target = 0.99, lo = 0.0, hi = 1.0;
  std::vector<double> ladder;
  gcoh::SweepSpec spec;
  std::string scale = "linear";

  CLI::App* c_coh = app.add_subcommand("coherence", "Single coherence value");
  add_common(c_coh, args);
  c_coh->add_option("--measure", measure, "bures|hellinger");

  CLI::App* c_sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  add_common(c_sweep, args);
  c_sweep->add_option("--vary", spec.vary, "r|beta|n_th|psi|n_sq|n_coh")
      ->required();
  c_sweep->add_option("--from", spec.from)->required();
  c_sweep->add_option("--to", spec.to)->required();
  c_sweep->add_option("--points", spec.points)->required();
  c_sweep->add_option("--scale", scale, "linear|log");
  c_sweep->add_option("--measures", measures, "comma list of bures,hellinger");
  c_sweep->add_option("--out", out_path, "Output CSV path");

  CLI::App* c_thr = app.add_subcommand("threshold", "Coherence threshold search");
  add_common(c_thr, args);
  c_thr->add_option("--measure", measure, "bures|hellinger");
  c_thr->add_option("--target", target, "Coherence level in (0,1)");
  c_thr->add_option("--vary", vary, "r|beta|n_th|n_sq|n_coh")->required();
  c_thr->add_option("--lo", lo)->required();
  c_thr->add_option("--hi", hi)->required();

  CLI::App* c_asy = app.add_subcommand("asymptote", "Large-n_th plateau check");
  add_common(c_asy, args);
  c_asy->add_option("--measure", measure, "bures|hellinger");
  c_asy->add_option("--ladder", ladder, "n_th ladder values");

  CLI::App* c_val = app.add_subcommand("validate", "Fock-oracle equivalence");
  add_common(c_val, args);
  c_val->add_option("--dim", args.dim, "Fock cutoff");
  c_val->add_option("--grid", grid, "default|thermal");

  try {
    app.parse(argc, argv);
    apply_config(args);
    if (scale == "log") {
      spec.log_scale = true;
    } else if (scale != "linear") {
      throw CLI::ValidationError("--scale", "unknown scale: " + scale);
    }
    if (c_coh->parsed()) return run_coherence(args, measure);
    if (c_sweep->parsed()) return run_sweep_cmd(args, spec, measures, out_path);
    if (c_thr->parsed())
      return run_threshold(args, measure, target, vary, lo, hi);
    if (c_asy->parsed()) return run_asymptote(args, measure, ladder);
    if (c_val->parsed()) return run_validate(args, grid);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const gcoh::fock::OracleError& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  }
}
