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

#include <utility>

#include "jonesnmr/braid.hpp"
#include "jonesnmr/types.hpp"

// Two-dimensional Temperley-Lieb representation of B_3 built from a pair of
// rank-one projectors, and the braid representation
//
//   rho(s_i) = A * I + A^-1 * U_i,   A = exp(i theta),  delta = -A^2 - A^-2.
//
// U_1 = [[delta, 0], [0, 0]]
// U_2 = [[1/delta, sqrt(1 - delta^-2)], [sqrt(1 - delta^-2), delta - 1/delta]]
//
// rho is unitary exactly when U_2 is real, i.e. when delta^2 >= 1.
namespace jonesnmr {

// Tolerance used for admissibility at the interval endpoints, where
// delta^2 == 1 analytically but may round to slightly less.
inline constexpr double kAdmissibleTol = 1e-12;

/// Returns -2 cos(2 theta).
double delta_from_theta(double theta);

/// Maps theta into [0, 2 pi).
double canonical_angle(double theta);

/// True iff theta (mod 2 pi) lies in
/// [0,pi/6] u [pi/3,2pi/3] u [5pi/6,7pi/6] u [4pi/3,5pi/3] u [11pi/6,2pi],
/// equivalently delta(theta)^2 >= 1. Endpoints are admissible.
bool is_admissible(double theta);

/// Parameters of the representation at a single angle.
struct ReprParams {
  double theta = 0.0;
  Complex A{1.0, 0.0};
  double delta = -2.0;
  bool admissible = true;

  /// Admissible angles only; throws DomainError otherwise.
  static ReprParams from_theta(double theta);

  /// Any angle with delta != 0, including the gaps where the representation
  /// is no longer unitary. Used to probe the unitarity boundary.
  static ReprParams continued(double theta);
};

/// (U_1, U_2) at admissible parameters. Both are real symmetric. At the
/// interval endpoints (delta^2 == 1) the off-diagonal entry is exactly 0.
/// Throws DomainError for non-admissible params.
std::pair<ComplexMatrix, ComplexMatrix> build_u(const ReprParams& params);

/// Same formulas evaluated with a complex square root, so U_2 picks up
/// imaginary off-diagonals in the gaps. Throws DomainError only for delta == 0.
std::pair<ComplexMatrix, ComplexMatrix> build_u_continued(const ReprParams& params);

/// rho(g) for g in {s1, s2, s1^-1, s2^-1}. Inverses are conjugate transposes.
/// Throws UnsupportedError for index > 2 and DomainError off the admissible set.
ComplexMatrix rho_generator(const BraidGenerator& g, const ReprParams& params);

/// A*I + A^-1*U_i with U_i from build_u_continued; never throws for delta != 0.
/// Inverse letters use the matrix inverse A^-1*I + A*U_i, which is the
/// group-theoretic inverse even where rho is not unitary.
ComplexMatrix rho_generator_continued(const BraidGenerator& g, const ReprParams& params);

/// Left-to-right product of rho over the letters; identity for the empty word.
/// Requires a 3-strand word.
ComplexMatrix rho_word(const BraidWord& word, const ReprParams& params);

}  // namespace jonesnmr
