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

#include "jonesnmr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jonesnmr/errors.hpp"
#include "jonesnmr/jones.hpp"
#include "jonesnmr/tl_rep.hpp"

namespace jonesnmr::sweep {

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"trefoil", "figure8", "borromean"};
  return names;
}

BraidWord preset(std::string_view name) {
  if (name == "trefoil") return parse_braid("s1^3", 3);
  if (name == "figure8") return parse_braid("s1 s2^-1 s1 s2^-1", 3);
  if (name == "borromean") return parse_braid("s1 s2^-1 s1 s2^-1 s1 s2^-1", 3);
  std::string valid;
  for (const auto& n : preset_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'; valid presets: " + valid);
}

std::vector<double> degree_grid(double min_deg, double max_deg, double step_deg) {
  if (!(step_deg > 0.0)) throw std::invalid_argument("theta step must be > 0");
  if (!(max_deg >= min_deg)) throw std::invalid_argument("theta max must be >= theta min");
  const auto count = static_cast<long long>(std::floor((max_deg - min_deg) / step_deg + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) grid.push_back(min_deg + static_cast<double>(k) * step_deg);
  return grid;
}

std::vector<double> default_grid_degrees() { return degree_grid(0.0, 30.0, 1.0); }

namespace {

SweepRecord evaluate_point(const BraidWord& word, double deg, const nmr::EvqcPrecision& prec,
                           bool with_oracle) {
  SweepRecord r;
  r.theta_deg = deg;
  r.theta_rad = deg * kPi / 180.0;
  const ReprParams params = ReprParams::from_theta(r.theta_rad);
  r.A = params.A;
  r.delta = params.delta;

  const InvariantValues inv = evaluate(word, params);
  r.trace_exact = inv.trace;
  r.bracket = inv.bracket;
  r.f = inv.f;
  r.t = inv.t;
  r.jones = inv.jones;

  nmr::EvqcSimulator sim(prec);
  r.trace_nmr = sim.estimate_trace(rho_word(word, params));
  r.eq9_bound = nmr::trace_error_bound(1, prec);
  if (with_oracle) r.bracket_oracle = bracket_state_sum(word, params.A);
  return r;
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

std::vector<SweepRecord> run_sweep(const BraidWord& word, const std::vector<double>& grid_deg,
                                   const nmr::EvqcPrecision& prec, bool with_oracle,
                                   unsigned threads) {
  for (double deg : grid_deg) {
    if (!is_admissible(deg * kPi / 180.0)) {
      std::ostringstream msg;
      msg << "theta = " << deg << " deg is outside the unitary range of the representation";
      throw DomainError(msg.str());
    }
  }
  if (word.strands() != 3) {
    throw UnsupportedError("sweeps need a 3-strand braid, got " + std::to_string(word.strands()));
  }

  std::vector<SweepRecord> records(grid_deg.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, grid_deg.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid_deg.size(); i = next++) {
      try {
        nmr::EvqcPrecision local = prec;
        local.seed = point_seed(prec.seed, i);
        records[i] = evaluate_point(word, grid_deg[i], local, with_oracle);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::stable_sort(records.begin(), records.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return a.theta_deg < b.theta_deg; });
  return records;
}

SweepCheck check_records(const std::vector<SweepRecord>& records, double epsilon, double oracle_tol) {
  SweepCheck check;
  for (const auto& r : records) {
    std::ostringstream msg;
    if (r.bracket_oracle) {
      const double dev = std::abs(r.bracket - *r.bracket_oracle);
      check.max_oracle_deviation = std::max(check.max_oracle_deviation, dev);
      if (!(dev <= oracle_tol)) {
        ++check.violations;
        msg << "theta=" << r.theta_deg << " deg: |bracket - oracle| = " << dev << " > " << oracle_tol;
        check.messages.push_back(msg.str());
        msg.str("");
      }
    }
    const double dev = std::abs(r.trace_nmr - r.trace_exact);
    check.max_trace_deviation = std::max(check.max_trace_deviation, dev);
    const double bound = epsilon > 0.0 ? r.eq9_bound : kExactTraceTolerance;
    if (!(dev <= bound)) {
      ++check.violations;
      msg << "theta=" << r.theta_deg << " deg: |trace_nmr - trace| = " << dev << " > " << bound;
      check.messages.push_back(msg.str());
    }
  }
  check.ok = check.violations == 0;
  return check;
}

std::string csv_header() {
  return "theta_deg,theta_rad,A_re,A_im,delta,trace_re,trace_im,trace_nmr_re,trace_nmr_im,"
         "bracket_re,bracket_im,oracle_re,oracle_im,f_re,f_im,t_re,t_im,jones_re,jones_im,"
         "eq9_bound";
}

namespace {

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // no "-0" in the output
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& r : records) {
    const std::vector<std::string> fields = {
        num(r.theta_deg),        num(r.theta_rad),        num(r.A.real()),
        num(r.A.imag()),         num(r.delta),            num(r.trace_exact.real()),
        num(r.trace_exact.imag()), num(r.trace_nmr.real()), num(r.trace_nmr.imag()),
        num(r.bracket.real()),   num(r.bracket.imag()),
        r.bracket_oracle ? num(r.bracket_oracle->real()) : std::string(),
        r.bracket_oracle ? num(r.bracket_oracle->imag()) : std::string(),
        num(r.f.real()),         num(r.f.imag()),         num(r.t.real()),
        num(r.t.imag()),         num(r.jones.real()),     num(r.jones.imag()),
        num(r.eq9_bound)};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << fields[i];
    }
    out << '\n';
  }
}

void write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_csv(records, file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace jonesnmr::sweep
