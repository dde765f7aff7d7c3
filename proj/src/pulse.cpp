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

#include "jonesnmr/pulse.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "jonesnmr/errors.hpp"
#include "jonesnmr/tl_rep.hpp"

namespace jonesnmr::pulse {

namespace {

constexpr double kAngleTol = 1e-12;

void require_pulse_range(double theta) {
  if (!(theta >= -kAngleTol && theta <= kPi / 6.0 + kAngleTol)) {
    throw DomainError("theta = " + std::to_string(theta) + " rad outside [0, pi/6]");
  }
}

void require_which(int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
}

// exp(-i angle sigma / 2) for sigma in {y, z}.
ComplexMatrix spin_rotation(char axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  ComplexMatrix r(2, 2);
  if (axis == 'y') {
    r << c, -s, s, c;
  } else if (axis == 'z') {
    r << std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0);
  } else {
    throw std::invalid_argument(std::string("rotation axis must be y or z, got '") + axis + "'");
  }
  return r;
}

ComplexMatrix instruction_propagator(const PulseInstruction& ins) {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  switch (ins.kind) {
    case InstructionKind::kRotation: {
      const ComplexMatrix r = spin_rotation(ins.axis, ins.angle);
      const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
      const ComplexMatrix& first = ins.spin == 1 ? r : id;
      const ComplexMatrix& second = ins.spin == 1 ? id : r;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u.block(2 * i, 2 * j, 2, 2) = first(i, j) * second;
      break;
    }
    case InstructionKind::kCoupling: {
      // sigma_z (x) sigma_z has eigenvalues +1, -1, -1, +1.
      const Complex same = std::polar(1.0, -ins.angle / 2.0);
      const Complex diff = std::polar(1.0, ins.angle / 2.0);
      u.diagonal() << same, diff, diff, same;
      break;
    }
    case InstructionKind::kPhase:
      u = std::polar(1.0, ins.angle) * ComplexMatrix::Identity(4, 4);
      break;
  }
  return u;
}

double reduce_coupling(double angle) {
  // exp(-i angle sigma_z sigma_z / 2) has period 4 pi in the angle.
  double a = std::fmod(angle, 4.0 * kPi);
  if (a < 0.0) a += 4.0 * kPi;
  if (a >= 4.0 * kPi) a = 0.0;
  return a;
}

struct ZyzFactors {
  double phase;  // phi
  double a;
  double b;
  double c;
};

// v = e^{i phi} Rz(a) Ry(b) Rz(c) for a 2x2 unitary v.
ZyzFactors zyz_decompose(const ComplexMatrix& v) {
  const Complex det = v.determinant();
  const double phi = std::arg(det) / 2.0;
  const ComplexMatrix w = std::polar(1.0, -phi) * v;  // in SU(2)
  const double cos_half = std::abs(w(1, 1));
  const double sin_half = std::abs(w(1, 0));
  const double b = 2.0 * std::atan2(sin_half, cos_half);
  // w(1,1) = e^{i(a+c)/2} cos(b/2), w(1,0) = e^{i(a-c)/2} sin(b/2).
  const double sum = cos_half > 1e-14 ? 2.0 * std::arg(w(1, 1)) : 0.0;
  const double diff = sin_half > 1e-14 ? 2.0 * std::arg(w(1, 0)) : 0.0;
  return {phi, (sum + diff) / 2.0, b, (sum - diff) / 2.0};
}

void emit_controlled_rz(std::vector<PulseInstruction>& out, double x) {
  // Time order: coupling first, then the spin-2 rotation.
  out.push_back(PulseInstruction::coupling(reduce_coupling(-x / 2.0)));
  out.push_back(PulseInstruction::rotation(2, 'z', x / 2.0));
}

}  // namespace

PulseAngles pulse_angles(double theta, int which) {
  require_which(which);
  require_pulse_range(theta);
  PulseAngles angles;
  angles.alpha = 0.5 * kPi - 2.0 * theta;
  angles.beta = 0.5 * kPi + theta;
  if (which == 2) {
    const double c2 = std::cos(2.0 * theta);
    double radicand = 4.0 * c2 * c2 - 1.0;
    // Rounding residue at the endpoint would otherwise leave gamma ~ 1e-8.
    if (radicand <= kAngleTol) radicand = 0.0;
    // atan2 with a non-negative second argument equals atan(y/x) and gives
    // -pi/2 in the x -> 0+ limit reached at theta = pi/6.
    angles.gamma = std::atan2(std::cos(4.0 * theta), std::sqrt(radicand)) + kPi / 2.0;
  }
  return angles;
}

PulseInstruction PulseInstruction::rotation(int spin, char axis, double angle) {
  if (spin != 1 && spin != 2) throw std::invalid_argument("rotation spin must be 1 or 2");
  if (axis != 'y' && axis != 'z') throw std::invalid_argument("rotation axis must be y or z");
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle must be finite");
  return {InstructionKind::kRotation, spin, axis, angle};
}

PulseInstruction PulseInstruction::coupling(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("coupling angle must be finite");
  return {InstructionKind::kCoupling, 0, 0, angle};
}

PulseInstruction PulseInstruction::phase(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("phase angle must be finite");
  return {InstructionKind::kPhase, 0, 0, angle};
}

ComplexMatrix controlled_target(const ProgramTarget& target) {
  require_which(target.which);
  const ReprParams params = ReprParams::from_theta(target.theta);
  const ComplexMatrix s =
      rho_generator(BraidGenerator(target.which, target.inverse ? -1 : 1), params);
  ComplexMatrix full = ComplexMatrix::Identity(4, 4);
  full.bottomRightCorner(2, 2) = s;
  return full;
}

PulseProgram compile_controlled_s(int which, double theta, bool inverse) {
  require_which(which);
  require_pulse_range(theta);
  theta = std::clamp(theta, 0.0, kPi / 6.0);
  if (!is_admissible(theta)) throw DomainError("theta is not an admissible angle");

  const ProgramTarget target{which, theta, inverse};
  const ComplexMatrix s = controlled_target(target).bottomRightCorner(2, 2);
  const ZyzFactors f = zyz_decompose(s);

  PulseProgram program;
  program.target = target;
  auto& out = program.instructions;
  // The product C-Rz(a) C-Ry(b) C-Rz(c) is emitted right factor first.
  emit_controlled_rz(out, f.c);
  // C-Ry(b) = Ry_2(b/2) C-Rz(pi) Ry_2(-b/2) C-Rz(-pi)
  emit_controlled_rz(out, -kPi);
  out.push_back(PulseInstruction::rotation(2, 'y', -f.b / 2.0));
  emit_controlled_rz(out, kPi);
  out.push_back(PulseInstruction::rotation(2, 'y', f.b / 2.0));
  emit_controlled_rz(out, f.a);
  // diag(1, e^{i phi}) on the control = e^{i phi/2} Rz_1(phi).
  out.push_back(PulseInstruction::rotation(1, 'z', f.phase));
  out.push_back(PulseInstruction::phase(f.phase / 2.0));
  return program;
}

ComplexMatrix simulate_program(const PulseProgram& program) {
  ComplexMatrix u = ComplexMatrix::Identity(4, 4);
  for (const auto& ins : program.instructions) u = instruction_propagator(ins) * u;
  return u;
}

double verify_program(const PulseProgram& program, const ComplexMatrix& target) {
  if (target.rows() != 4 || target.cols() != 4) {
    throw DimensionError("verify_program: target must be a 4x4 two-spin propagator");
  }
  const ComplexMatrix u = simulate_program(program);
  return std::abs((target.adjoint() * u).trace()) / static_cast<double>(target.rows());
}

namespace {

std::string format_angle(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string print_program(const PulseProgram& program) {
  std::string out;
  for (const auto& ins : program.instructions) {
    switch (ins.kind) {
      case InstructionKind::kRotation:
        out += "ROT spin=" + std::to_string(ins.spin) + " axis=" + ins.axis +
               " angle=" + format_angle(ins.angle);
        break;
      case InstructionKind::kCoupling:
        out += "COUPLE angle=" + format_angle(ins.angle);
        break;
      case InstructionKind::kPhase:
        out += "PHASE angle=" + format_angle(ins.angle);
        break;
    }
    out += '\n';
  }
  return out;
}

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t offset) : line_(line), offset_(offset) {}

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t') ++pos_;
    return line_.substr(start, pos_ - start);
  }

  // Reads `key=value` and returns value.
  std::string_view field(std::string_view key) {
    skip_space();
    const std::size_t at = pos_;
    const std::string_view token = word();
    if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
        token[key.size()] != '=') {
      throw ParseError("expected '" + std::string(key) + "=...'", offset_ + at);
    }
    value_pos_ = offset_ + at + key.size() + 1;
    return token.substr(key.size() + 1);
  }

  double number(std::string_view key) {
    const std::string_view text = field(key);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
      throw ParseError("invalid angle '" + std::string(text) + "'", value_pos_);
    }
    return value;
  }

  void expect_end() {
    skip_space();
    if (pos_ != line_.size()) throw ParseError("trailing characters", offset_ + pos_);
  }

  std::size_t position() const { return offset_ + pos_; }
  std::size_t value_position() const { return value_pos_; }

 private:
  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  std::string_view line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  std::size_t value_pos_ = 0;
};

}  // namespace

PulseProgram parse_program(std::string_view text) {
  PulseProgram program;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineReader reader(line, offset);
    const std::size_t op_pos = offset + line.find_first_not_of(" \t");
    const std::string_view op = reader.word();
    if (op.empty()) {
      // blank line
    } else if (op == "ROT") {
      const std::string_view spin = reader.field("spin");
      const std::size_t spin_pos = reader.value_position();
      if (spin != "1" && spin != "2") throw ParseError("spin must be 1 or 2", spin_pos);
      const std::string_view axis = reader.field("axis");
      if (axis != "y" && axis != "z") throw ParseError("axis must be y or z", reader.value_position());
      const double angle = reader.number("angle");
      program.instructions.push_back(PulseInstruction::rotation(spin[0] - '0', axis[0], angle));
    } else if (op == "COUPLE") {
      program.instructions.push_back(PulseInstruction::coupling(reader.number("angle")));
    } else if (op == "PHASE") {
      program.instructions.push_back(PulseInstruction::phase(reader.number("angle")));
    } else {
      throw ParseError("unknown instruction '" + std::string(op) + "'", op_pos);
    }
    reader.expect_end();
    offset = end + 1;
  }
  return program;
}

}  // namespace jonesnmr::pulse
