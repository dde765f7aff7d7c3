// Copyright 2026 The jonesnmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jonesnmr/braid.hpp"
#include "jonesnmr/nmr.hpp"
#include "jonesnmr/types.hpp"

namespace jonesnmr::sweep {

inline constexpr double kOracleTolerance = 1e-9;
inline constexpr double kExactTraceTolerance = 1e-10;

/// Knot presets: trefoil (s1^3), figure8 (s1 s2^-1 s1 s2^-1) and borromean
/// ((s1 s2^-1)^3), all on three strands.
BraidWord preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Grid min, min+step, ..., max in degrees (max included when it lies on
/// the grid, up to rounding).
std::vector<double> degree_grid(double min_deg, double max_deg, double step_deg);

/// The 31-point grid 0..30 degrees.
std::vector<double> default_grid_degrees();

struct SweepRecord {
  double theta_deg = 0.0;
  double theta_rad = 0.0;
  Complex A;
  double delta = 0.0;
  Complex trace_exact;
  Complex trace_nmr;
  Complex bracket;
  std::optional<Complex> bracket_oracle;
  Complex f;
  Complex t;
  Complex jones;
  double eq9_bound = 0.0;  // hard bound on |trace_nmr - trace_exact|
};

/// Evaluates every gridpoint (degrees). Gridpoints run concurrently on up to
/// `threads` workers (0 = hardware concurrency); each gets its own simulator
/// seeded from (prec.seed, gridpoint index), so results do not depend on
/// scheduling. Records are returned in grid order. Throws DomainError naming
/// the first inadmissible angle.
std::vector<SweepRecord> run_sweep(const BraidWord& word, const std::vector<double>& grid_deg,
                                   const nmr::EvqcPrecision& prec, bool with_oracle,
                                   unsigned threads = 0);

struct SweepCheck {
  bool ok = true;
  double max_oracle_deviation = 0.0;
  double max_trace_deviation = 0.0;
  int violations = 0;
  std::vector<std::string> messages;
};

/// Oracle agreement within `oracle_tol` (when the oracle was run) and
/// |trace_nmr - trace_exact| <= eq9_bound, or <= kExactTraceTolerance when
/// epsilon == 0.
SweepCheck check_records(const std::vector<SweepRecord>& records, double epsilon,
                         double oracle_tol = kOracleTolerance);

/// CSV with the fixed header
/// theta_deg,theta_rad,A_re,A_im,delta,trace_re,trace_im,trace_nmr_re,
/// trace_nmr_im,bracket_re,bracket_im,oracle_re,oracle_im,f_re,f_im,t_re,
/// t_im,jones_re,jones_im,eq9_bound
/// and numbers printed with 12 significant digits. Oracle columns are empty
/// when the oracle was not run.
void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);
std::string csv_header();

/// Writes the CSV to `path`; throws std::runtime_error on I/O failure.
void write_csv(const std::vector<SweepRecord>& records, const std::string& path);

}  // namespace jonesnmr::sweep
