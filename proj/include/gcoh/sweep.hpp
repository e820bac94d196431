#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcoh/coherence.hpp"

// Parameter sweeps over the state families. Rows are independent, so the
// parallel path distributes them with OpenMP; the serial path is the
// reference implementation the tests compare against. Output is assembled
// in index order either way, so the CSV bytes never depend on scheduling.

namespace gcoh {

struct SweepSpec {
  Family family = Family::STS;
  std::string vary = "r";  // r | beta | n_th | psi | n_sq | n_coh
  double from = 0.0;
  double to = 1.0;
  int points = 2;
  bool log_scale = false;
  FamilyParams fixed;
  bool bures = true;
  bool hellinger = true;
};

struct SweepRow {
  double varied_value = 0.0;
  std::optional<double> c_bures;
  std::optional<double> c_hellinger;
  std::optional<double> argmax_ni_bures;
  std::optional<double> argmax_ni_hellinger;
  bool failed = false;
};

enum class ExecMode { Serial, Parallel };

// Throws std::invalid_argument on a malformed spec (from >= to, log scale
// with from <= 0, points < 2). A row whose evaluation throws is marked
// failed with NaN values; the remaining rows still complete.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const OptimizerOptions& opts = {},
                                ExecMode mode = ExecMode::Parallel);

// Header `varied,c_bures,c_hellinger,argmax_ni_bures,argmax_ni_hellinger`,
// scientific notation with 12 significant digits, absent measures as empty
// fields, failed rows as nan.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace gcoh
