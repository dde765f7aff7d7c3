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

#include <vector>

#include "jonesnmr/braid.hpp"
#include "jonesnmr/tl_rep.hpp"
#include "jonesnmr/types.hpp"

namespace jonesnmr {

/// Knot-invariant values of a closed 3-braid at one angle.
///
///   bracket = tr rho(b) + A^I(b) (delta^2 - 2)
///   f       = (-A^3)^(-I(b)) * bracket
///   t       = A^-4,   jones = V(t) = f evaluated at A
struct InvariantValues {
  Complex trace;
  Complex bracket;
  Complex f;
  Complex t;
  Complex jones;
};

/// Invariants from the trace of the unitary representation.
InvariantValues evaluate(const BraidWord& word, const ReprParams& params);

/// Bracket from a trace value that came from elsewhere (e.g. the simulator).
Complex bracket_from_trace(Complex trace, int exponent_sum, const ReprParams& params);

/// Normalised invariant (-A^3)^(-I) * bracket, computed with integer powers.
Complex normalized_invariant(Complex bracket, int exponent_sum, Complex A);

// Temperley-Lieb diagram on n strands. Boundary points 0..n-1 are the top
// row (left to right) and n..2n-1 the bottom row (left to right);
// partner[p] is the point p is joined to. `loops` counts closed circles
// removed while composing.
struct TLDiagram {
  int strands = 0;
  std::vector<int> partner;
  int loops = 0;

  static TLDiagram identity(int strands);
  /// Cup-cap e_i joining strands i and i+1 (1-based) on both rows.
  static TLDiagram cup_cap(int strands, int i);

  /// Perfect pairing without crossings.
  bool is_valid() const;

  /// Number of circles in the standard closure (top j joined to bottom j),
  /// not counting `loops`.
  int closure_components() const;

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
};

/// Stacks d2 under d1 (the algebra product d1 * d2). Closed circles formed
/// in the middle row are added to the loop count, together with the loop
/// counts of both inputs.
TLDiagram compose_tl(const TLDiagram& d1, const TLDiagram& d2);

struct StateSumLimits {
  int max_strands = 8;
  int max_letters = 20;
};

/// Kauffman bracket of the braid closure by exhaustive enumeration of the
/// 2^c smoothings, normalised so that the unknot evaluates to 1:
///
///   <b> = sum_states A^(#A - #B) delta^(circles - 1),  delta = -A^2 - A^-2.
///
/// For s_i the A-smoothing keeps both strands vertical and the B-smoothing is
/// the cup-cap e_i; for s_i^-1 the roles swap. This is the convention under
/// which rho(s_i) = A*I + A^-1*U_i expands crossing by crossing.
Complex bracket_state_sum(const BraidWord& word, Complex A, StateSumLimits limits = {});

}  // namespace jonesnmr
