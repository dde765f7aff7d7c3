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

#include "jonesnmr/tl_rep.hpp"

#include <cmath>
#include <sstream>

#include "jonesnmr/errors.hpp"

namespace jonesnmr {

double delta_from_theta(double theta) { return -2.0 * std::cos(2.0 * theta); }

double canonical_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t = 0.0;
  return t;
}

bool is_admissible(double theta) {
  const double d = delta_from_theta(canonical_angle(theta));
  return d * d >= 1.0 - kAdmissibleTol;
}

ReprParams ReprParams::from_theta(double theta) {
  if (!is_admissible(theta)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " rad is outside the unitary range (delta^2 = "
        << delta_from_theta(theta) * delta_from_theta(theta) << " < 1)";
    throw DomainError(msg.str());
  }
  return continued(theta);
}

ReprParams ReprParams::continued(double theta) {
  ReprParams p;
  p.theta = canonical_angle(theta);
  p.A = std::polar(1.0, p.theta);
  p.delta = delta_from_theta(p.theta);
  p.admissible = is_admissible(p.theta);
  if (std::abs(p.delta) < kAdmissibleTol) throw DomainError("delta = 0: U_2 is singular");
  return p;
}

std::pair<ComplexMatrix, ComplexMatrix> build_u_continued(const ReprParams& params) {
  const double d = params.delta;
  if (std::abs(d) < kAdmissibleTol) throw DomainError("delta = 0: U_2 is singular");
  Complex off = std::sqrt(Complex(1.0 - 1.0 / (d * d), 0.0));
  // Snap the endpoint case to an exact zero so U_2 degenerates cleanly.
  if (params.admissible && std::abs(d * d - 1.0) <= kAdmissibleTol) off = 0.0;

  ComplexMatrix u1 = ComplexMatrix::Zero(2, 2);
  u1(0, 0) = d;
  ComplexMatrix u2(2, 2);
  u2 << 1.0 / d, off, off, d - 1.0 / d;
  return {u1, u2};
}

std::pair<ComplexMatrix, ComplexMatrix> build_u(const ReprParams& params) {
  if (!params.admissible) {
    throw DomainError("build_u: theta = " + std::to_string(params.theta) +
                      " is not admissible (delta^2 < 1)");
  }
  auto [u1, u2] = build_u_continued(params);
  // Real by construction on the admissible set.
  u2 = u2.real().cast<Complex>();
  return {u1, u2};
}

namespace {

void require_three_strand_generator(const BraidGenerator& g) {
  if (g.index != 1 && g.index != 2) {
    throw UnsupportedError("only s1 and s2 are represented (3-strand braids); got s" +
                           std::to_string(g.index));
  }
}

ComplexMatrix forward(const ComplexMatrix& u, Complex a) {
  return a * ComplexMatrix::Identity(2, 2) + (1.0 / a) * u;
}

}  // namespace

ComplexMatrix rho_generator(const BraidGenerator& g, const ReprParams& params) {
  require_three_strand_generator(g);
  const auto [u1, u2] = build_u(params);
  ComplexMatrix m = forward(g.index == 1 ? u1 : u2, params.A);
  if (g.sign < 0) return m.adjoint();
  return m;
}

ComplexMatrix rho_generator_continued(const BraidGenerator& g, const ReprParams& params) {
  require_three_strand_generator(g);
  const auto [u1, u2] = build_u_continued(params);
  const ComplexMatrix& u = g.index == 1 ? u1 : u2;
  return forward(u, g.sign > 0 ? params.A : 1.0 / params.A);
}

ComplexMatrix rho_word(const BraidWord& word, const ReprParams& params) {
  if (word.strands() != 3) {
    throw UnsupportedError("rho_word: the representation is defined for 3-strand braids, got " +
                           std::to_string(word.strands()));
  }
  const auto [u1, u2] = build_u(params);
  const ComplexMatrix gens[2] = {forward(u1, params.A), forward(u2, params.A)};
  ComplexMatrix product = ComplexMatrix::Identity(2, 2);
  for (const auto& g : word.letters()) {
    const ComplexMatrix& m = gens[g.index - 1];
    if (g.sign > 0) {
      product = product * m;
    } else {
      product = product * m.adjoint();
    }
  }
  return product;
}

}  // namespace jonesnmr
