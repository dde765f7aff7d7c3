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

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "jonesnmr/types.hpp"

// Path-model representation of the Temperley-Lieb algebra on a line graph
// 1 - 2 - ... - k. Basis vectors are bitstrings read as walks starting at
// node 1 (bit 1 = step right, bit 0 = step left). E_i acts on bits (i, i+1)
// through the rank-one projector |v(a)><v(a)| with a = z(i) the node reached
// after the first i-1 bits and
//
//   v(a) = ( sqrt(L_{a-1} / L_a), sqrt(L_{a+1} / L_a) ),  L_k = sin(k theta),
//
// whose components refer to the local pairs "01" and "10" in that order.
namespace jonesnmr::ajl {

using Bitstring = std::string;

struct LineGraph {
  int nodes = 3;

  explicit LineGraph(int nodes);
};

/// Angle data for the path model: d = 2 cos(theta), A = i exp(i theta / 2).
class AjlParams {
 public:
  /// Requires sin(k theta) > 0 for k = 1..max_node; throws DomainError
  /// otherwise (zeros other than k = 0 are rejected).
  AjlParams(double theta, int max_node);

  double theta() const noexcept { return theta_; }
  double d() const noexcept { return d_; }
  Complex A() const noexcept { return a_; }
  int max_node() const noexcept { return max_node_; }

  /// L_k = sin(k theta).
  double lambda(int k) const;

 private:
  double theta_;
  double d_;
  Complex a_;
  int max_node_;
};

/// Ordered basis of admissible walks. For the 3-node, 3-bit space the order
/// is [110, 101]; in general states are sorted in descending lexicographic
/// order.
struct PathBasis {
  LineGraph graph;
  int bits = 0;
  std::vector<Bitstring> states;

  /// Position of `state` in `states`, or -1.
  int find(std::string_view state) const;
};

/// Node reached after the first i-1 bits of `p`, starting from node 1.
/// Requires 1 <= i <= len(p)+1. Throws DomainError if the walk leaves
/// [1, max_node] on that prefix.
int walk_endpoint(std::string_view p, int i,
                  int max_node = std::numeric_limits<int>::max());

/// All bitstrings of length `bits` whose walk stays inside the graph.
PathBasis admissible_states(const LineGraph& graph, int bits);

/// Matrix of E_i (1 <= i <= bits-1) on `basis`. Entries involving a pair
/// partner that is not an admissible walk are dropped.
ComplexMatrix build_e(int i, const AjlParams& params, const PathBasis& basis);

/// Image of s_i under A*I + A^-1*E_i (sign -1 gives A^-1*I + A*E_i).
ComplexMatrix ajl_braid_generator(int i, int sign, const AjlParams& params,
                                  const PathBasis& basis);

/// KL angle whose representation matches the 3-node path model at theta:
/// same A, hence delta_KL == d_AJL. theta_KL = pi/2 + theta/2.
double matched_kl_theta(double ajl_theta);

/// Permutation taking the path basis [110, 101] to the KL basis order, i.e.
/// the ordering in which E_1's nonzero eigenvector comes first: [101, 110].
ComplexMatrix kl_basis_permutation();

/// Largest entrywise deviation between (E_1, E_2) on the 3-node graph and
/// (U_1, U_2) at the matched KL angle, after the basis permutation, and
/// between the two braid-group images of s_1^{+-1}, s_2^{+-1}.
/// Throws DomainError when theta is not a valid 3-node path-model angle.
double kl_correspondence_check(double ajl_theta);

}  // namespace jonesnmr::ajl
