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

// jonesnmr: Jones polynomial sweeps for closed 3-braids, pulse-sequence
// angles, and controlled-generator pulse programs.
//
//   jonesnmr sweep --preset trefoil --oracle --out trefoil.csv
//   jonesnmr angles --theta-deg 10 --which 2
//   jonesnmr compile --which 2 --theta-deg 15 --inverse
//
// Exit status: 0 on success, 1 if a sweep violates the oracle tolerance or
// the simulator error bound, 2 on invalid input.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jonesnmr/braid.hpp"
#include "jonesnmr/pulse.hpp"
#include "jonesnmr/sweep.hpp"
#include "jonesnmr/types.hpp"

namespace {

using namespace jonesnmr;

struct SweepOptions {
  std::string braid;
  std::string preset;
  int strands = 3;
  double theta_min_deg = 0.0;
  double theta_max_deg = 30.0;
  double theta_step_deg = 1.0;
  double epsilon = 0.0;
  double alpha1 = 1.0;
  std::uint64_t seed = 0;
  bool oracle = false;
  std::string out;
  double oracle_tolerance = sweep::kOracleTolerance;
  unsigned threads = 0;
};

int run_sweep_command(const SweepOptions& opt) {
  const BraidWord word = opt.preset.empty() ? parse_braid(opt.braid, opt.strands)
                                            : sweep::preset(opt.preset);
  const auto grid = sweep::degree_grid(opt.theta_min_deg, opt.theta_max_deg, opt.theta_step_deg);
  const nmr::EvqcPrecision prec{opt.epsilon, opt.alpha1, opt.seed};
  const auto records = sweep::run_sweep(word, grid, prec, opt.oracle, opt.threads);

  if (opt.out.empty() || opt.out == "-") {
    sweep::emit_csv(records, std::cout);
  } else {
    sweep::write_csv(records, opt.out);
  }

  const auto check = sweep::check_records(records, opt.epsilon, opt.oracle_tolerance);
  std::fprintf(stderr, "braid: %s  points: %zu  max|trace_nmr-trace|: %.3g", render(word).c_str(),
               records.size(), check.max_trace_deviation);
  if (opt.oracle) std::fprintf(stderr, "  max|bracket-oracle|: %.3g", check.max_oracle_deviation);
  std::fprintf(stderr, "\n");
  for (const auto& m : check.messages) std::fprintf(stderr, "violation: %s\n", m.c_str());
  return check.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones polynomial evaluation and NMR trace-estimation simulator for 3-braids"};
  app.require_subcommand(1);

  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate invariants over a theta grid and emit CSV");
  auto* braid_opt = sweep_cmd->add_option("--braid", sw.braid, "Braid word, e.g. \"s1 s2^-1 s1\"");
  auto* preset_opt = sweep_cmd->add_option("--preset", sw.preset, "trefoil | figure8 | borromean");
  braid_opt->excludes(preset_opt);
  sweep_cmd->add_option("--strands", sw.strands, "Strand count of --braid")->capture_default_str();
  sweep_cmd->add_option("--theta-min-deg", sw.theta_min_deg)->capture_default_str();
  sweep_cmd->add_option("--theta-max-deg", sw.theta_max_deg)->capture_default_str();
  sweep_cmd->add_option("--theta-step-deg", sw.theta_step_deg)->capture_default_str();
  sweep_cmd->add_option("--epsilon", sw.epsilon, "EVQC measurement precision")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--alpha1", sw.alpha1, "Probe polarisation")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sw.seed)->capture_default_str();
  sweep_cmd->add_flag("--oracle", sw.oracle, "Cross-check against the bracket state sum");
  sweep_cmd->add_option("--out", sw.out, "Output CSV path (default: stdout)");
  sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--oracle-tolerance", sw.oracle_tolerance)
      ->group("")  // test hook
      ->capture_default_str();

  double angles_theta_deg = 0.0;
  int angles_which = 2;
  auto* angles_cmd = app.add_subcommand("angles", "Print the pulse angles alpha, beta, gamma");
  angles_cmd->add_option("--theta-deg", angles_theta_deg)->required();
  angles_cmd->add_option("--which", angles_which)->required()->check(CLI::IsMember({1, 2}));

  double compile_theta_deg = 0.0;
  int compile_which = 1;
  bool compile_inverse = false;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a controlled-s1/s2 pulse program");
  compile_cmd->add_option("--which", compile_which)->required()->check(CLI::IsMember({1, 2}));
  compile_cmd->add_option("--theta-deg", compile_theta_deg)->required();
  compile_cmd->add_flag("--inverse", compile_inverse);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep_cmd->parsed()) {
      if (sw.preset.empty() && braid_opt->count() == 0) {
        std::fprintf(stderr, "sweep: one of --braid or --preset is required\n");
        return 2;
      }
      return run_sweep_command(sw);
    }
    if (angles_cmd->parsed()) {
      const auto a = pulse::pulse_angles(angles_theta_deg * kPi / 180.0, angles_which);
      std::printf("alpha=%.17g\nbeta=%.17g\ngamma=%.17g\n", a.alpha, a.beta, a.gamma);
      return 0;
    }
    if (compile_cmd->parsed()) {
      const auto program =
          pulse::compile_controlled_s(compile_which, compile_theta_deg * kPi / 180.0, compile_inverse);
      const double fidelity =
          pulse::verify_program(program, pulse::controlled_target(program.target));
      std::fputs(pulse::print_program(program).c_str(), stdout);
      std::printf("# fidelity=%.17g\n", fidelity);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
