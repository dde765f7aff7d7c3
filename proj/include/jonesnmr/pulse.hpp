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

#include <string>
#include <string_view>
#include <vector>

#include "jonesnmr/types.hpp"

// Two-spin pulse programs for the controlled braid generators 1 (+) s_j.
//
// Instruction propagators (spin 1 is the control / probe, spin 2 the target):
//   ROT   exp(-i angle S_nu),        S_nu = 1 (x) sigma_nu / 2   (spin 2)
//                                    I_nu = sigma_nu / 2 (x) 1   (spin 1)
//   COUPLE exp(-i angle 2 I_z S_z),  2 I_z S_z = sigma_z (x) sigma_z / 2,
//                                    angle = pi J t
//   PHASE  exp(i angle) * 1
namespace jonesnmr::pulse {

struct PulseAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// alpha = pi/2 - 2 theta, beta = pi/2 + theta and
/// gamma = atan(cos 4theta / sqrt(4 cos^2(2 theta) - 1)) + pi/2 for s_2;
/// gamma = 0 for s_1. The square root is read as sqrt(4 cos^2(2 theta) - 1),
/// real exactly on [0, pi/6]; at theta = pi/6 the one-sided limit gamma = 0
/// is returned. Throws DomainError outside [0, pi/6].
PulseAngles pulse_angles(double theta, int which);

enum class InstructionKind { kRotation, kCoupling, kPhase };

struct PulseInstruction {
  InstructionKind kind = InstructionKind::kPhase;
  int spin = 0;    // rotations only
  char axis = 0;   // rotations only: 'y' or 'z'
  double angle = 0.0;

  static PulseInstruction rotation(int spin, char axis, double angle);
  static PulseInstruction coupling(double angle);
  static PulseInstruction phase(double angle);

  friend bool operator==(const PulseInstruction&, const PulseInstruction&) = default;
};

struct ProgramTarget {
  int which = 1;
  double theta = 0.0;
  bool inverse = false;

  friend bool operator==(const ProgramTarget&, const ProgramTarget&) = default;
};

struct PulseProgram {
  std::vector<PulseInstruction> instructions;  // in time order
  ProgramTarget target;
};

/// Compiles 1 (+) s_which (or its inverse) at angle theta in [0, pi/6].
///
/// s = e^{i phi} Rz(a) Ry(b) Rz(c) is factored (ZYZ), then realised as
///   diag(1, e^{i phi}) . C-Rz(a) . C-Ry(b) . C-Rz(c)
/// with C-Rz(x) = Rz_2(x/2) COUPLE(-x/2) and
/// C-Ry(b) = Ry_2(b/2) C-Rz(pi) Ry_2(-b/2) C-Rz(-pi).
/// The control phase needs one z rotation on spin 1; every other rotation
/// acts on spin 2. Coupling angles are reduced into [0, 4 pi).
PulseProgram compile_controlled_s(int which, double theta, bool inverse);

/// Product of instruction propagators (later instructions on the left).
ComplexMatrix simulate_program(const PulseProgram& program);

/// |tr(target^dagger P)| / dim, insensitive to global phase.
double verify_program(const PulseProgram& program, const ComplexMatrix& target);

/// Target propagator 1 (+) rho(s_which)^{+-1} at theta.
ComplexMatrix controlled_target(const ProgramTarget& target);

/// One instruction per line:
///   ROT spin=<1|2> axis=<y|z> angle=<rad>
///   COUPLE angle=<rad>
///   PHASE angle=<rad>
/// Angles are printed with 17 significant digits so parsing is lossless.
std::string print_program(const PulseProgram& program);

/// Inverse of print_program (the target descriptor is not serialised).
/// Throws ParseError with the character offset of the bad token.
PulseProgram parse_program(std::string_view text);

}  // namespace jonesnmr::pulse
