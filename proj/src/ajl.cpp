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

#include "jonesnmr/ajl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "jonesnmr/errors.hpp"
#include "jonesnmr/tl_rep.hpp"

namespace jonesnmr::ajl {

LineGraph::LineGraph(int nodes) : nodes(nodes) {
  if (nodes < 2) throw std::invalid_argument("a line graph needs at least 2 nodes");
}

AjlParams::AjlParams(double theta, int max_node)
    : theta_(theta),
      d_(2.0 * std::cos(theta)),
      a_(kI * std::polar(1.0, theta / 2.0)),
      max_node_(max_node) {
  // A weight that is zero up to rounding makes E singular, so it counts as 0.
  constexpr double kWeightTol = 1e-12;
  for (int k = 1; k <= max_node; ++k) {
    if (!(std::sin(k * theta) > kWeightTol)) {
      throw DomainError("path model needs sin(k theta) > 0 for k = 1.." +
                        std::to_string(max_node) + "; fails at k = " + std::to_string(k) +
                        " for theta = " + std::to_string(theta));
    }
  }
}

double AjlParams::lambda(int k) const { return std::sin(k * theta_); }

int PathBasis::find(std::string_view state) const {
  auto it = std::find(states.begin(), states.end(), state);
  return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

int walk_endpoint(std::string_view p, int i, int max_node) {
  if (i < 1 || static_cast<std::size_t>(i) > p.size() + 1) {
    throw std::out_of_range("walk_endpoint: i must lie in [1, len(p)+1]");
  }
  int node = 1;
  for (int step = 0; step < i - 1; ++step) {
    const char bit = p[step];
    if (bit != '0' && bit != '1') throw std::invalid_argument("bitstrings contain only 0 and 1");
    node += bit == '1' ? 1 : -1;
    if (node < 1 || node > max_node) {
      throw DomainError("walk " + std::string(p) + " leaves the graph after " +
                        std::to_string(step + 1) + " steps");
    }
  }
  return node;
}

PathBasis admissible_states(const LineGraph& graph, int bits) {
  if (bits < 1) throw std::invalid_argument("admissible_states: bits must be >= 1");
  PathBasis basis{graph, bits, {}};
  Bitstring current;
  std::function<void(int)> extend = [&](int node) {
    if (static_cast<int>(current.size()) == bits) {
      basis.states.push_back(current);
      return;
    }
    // Right first gives descending lexicographic order directly.
    if (node + 1 <= graph.nodes) {
      current.push_back('1');
      extend(node + 1);
      current.pop_back();
    }
    if (node - 1 >= 1) {
      current.push_back('0');
      extend(node - 1);
      current.pop_back();
    }
  };
  extend(1);
  return basis;
}

ComplexMatrix build_e(int i, const AjlParams& params, const PathBasis& basis) {
  if (i < 1 || i > basis.bits - 1) {
    throw std::out_of_range("build_e: i must lie in [1, bits-1]");
  }
  const int dim = static_cast<int>(basis.states.size());
  ComplexMatrix e = ComplexMatrix::Zero(dim, dim);

  // Component of v(a) on the local pair at positions (i, i+1).
  auto component = [&](int a, char first, char second) -> double {
    const double la = params.lambda(a);
    if (!(la > 0.0)) {
      throw DomainError("build_e: lambda_" + std::to_string(a) + " <= 0");
    }
    const int neighbour = (first == '0' && second == '1') ? a - 1 : a + 1;
    const double ratio = params.lambda(neighbour) / la;
    if (ratio < 0.0) {
      throw DomainError("build_e: lambda_" + std::to_string(neighbour) + " < 0");
    }
    return std::sqrt(ratio);
  };

  for (int col = 0; col < dim; ++col) {
    const Bitstring& s = basis.states[col];
    const char b0 = s[i - 1];
    const char b1 = s[i];
    if (b0 == b1) continue;  // "00" and "11" are annihilated
    const int a = walk_endpoint(s, i, basis.graph.nodes);
    const double ket = component(a, b0, b1);
    for (const char* pair : {"01", "10"}) {
      Bitstring t = s;
      t[i - 1] = pair[0];
      t[i] = pair[1];
      const int row = basis.find(t);
      if (row < 0) continue;
      e(row, col) += component(a, pair[0], pair[1]) * ket;
    }
  }
  return e;
}

ComplexMatrix ajl_braid_generator(int i, int sign, const AjlParams& params,
                                  const PathBasis& basis) {
  const ComplexMatrix e = build_e(i, params, basis);
  const Complex a = sign > 0 ? params.A() : 1.0 / params.A();
  return a * ComplexMatrix::Identity(e.rows(), e.cols()) + (1.0 / a) * e;
}

double matched_kl_theta(double ajl_theta) { return kPi / 2.0 + ajl_theta / 2.0; }

ComplexMatrix kl_basis_permutation() {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 1) = 1.0;
  p(1, 0) = 1.0;
  return p;
}

double kl_correspondence_check(double ajl_theta) {
  const LineGraph graph(3);
  const AjlParams params(ajl_theta, graph.nodes);
  const PathBasis basis = admissible_states(graph, 3);

  const double kl_theta = matched_kl_theta(ajl_theta);
  if (!is_admissible(kl_theta)) {
    throw DomainError("no admissible KL angle matches theta = " + std::to_string(ajl_theta));
  }
  const ReprParams kl = ReprParams::from_theta(kl_theta);
  const auto [u1, u2] = build_u(kl);

  const ComplexMatrix p = kl_basis_permutation();
  auto to_kl = [&](const ComplexMatrix& m) -> ComplexMatrix { return p * m * p.transpose(); };

  double dev = 0.0;
  dev = std::max(dev, max_abs_diff(to_kl(build_e(1, params, basis)), u1));
  dev = std::max(dev, max_abs_diff(to_kl(build_e(2, params, basis)), u2));
  for (int i : {1, 2}) {
    for (int sign : {1, -1}) {
      const ComplexMatrix path = to_kl(ajl_braid_generator(i, sign, params, basis));
      const ComplexMatrix ref = rho_generator(BraidGenerator(i, sign), kl);
      dev = std::max(dev, max_abs_diff(path, ref));
    }
  }
  return dev;
}

}  // namespace jonesnmr::ajl
