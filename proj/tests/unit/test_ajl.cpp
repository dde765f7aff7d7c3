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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "jonesnmr/ajl.hpp"
#include "jonesnmr/errors.hpp"
#include "jonesnmr/tl_rep.hpp"

using namespace jonesnmr;
using namespace jonesnmr::ajl;

namespace {

// Brute force over all 2^bits strings, walking each one by hand.
std::vector<std::string> brute_force_states(int nodes, int bits) {
  std::vector<std::string> out;
  for (int mask = 0; mask < (1 << bits); ++mask) {
    std::string s;
    int node = 1;
    bool ok = true;
    for (int b = 0; b < bits; ++b) {
      const bool right = (mask >> (bits - 1 - b)) & 1;
      s += right ? '1' : '0';
      node += right ? 1 : -1;
      ok = ok && node >= 1 && node <= nodes;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("walk_endpoint on 1011") {
  CHECK(walk_endpoint("1011", 1) == 1);
  CHECK(walk_endpoint("1011", 2) == 2);
  CHECK(walk_endpoint("1011", 3) == 1);
  CHECK(walk_endpoint("1011", 4) == 2);
  CHECK(walk_endpoint("1011", 5) == 3);
  CHECK_THROWS_AS(walk_endpoint("0", 2), DomainError);
  CHECK_THROWS_AS(walk_endpoint("111", 4, 3), DomainError);
  CHECK_THROWS_AS(walk_endpoint("10", 4), std::out_of_range);
}

TEST_CASE("admissible_states") {
  const PathBasis three = admissible_states(LineGraph(3), 3);
  CHECK(three.states == std::vector<std::string>{"110", "101"});

  CHECK(admissible_states(LineGraph(2), 2).states == std::vector<std::string>{"10"});
  for (int k : {2, 3, 5}) {
    CHECK(admissible_states(LineGraph(k), 1).states == std::vector<std::string>{"1"});
  }

  for (int nodes = 2; nodes <= 5; ++nodes) {
    for (int bits = 1; bits <= 8; ++bits) {
      auto expected = brute_force_states(nodes, bits);
      auto got = admissible_states(LineGraph(nodes), bits).states;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("AjlParams validation") {
  CHECK_NOTHROW(AjlParams(0.3, 3));
  CHECK_THROWS_AS(AjlParams(0.0, 3), DomainError);        // sin(0) at k = 1
  CHECK_THROWS_AS(AjlParams(kPi / 3.0, 3), DomainError);  // sin(pi) = 0 at k = 3
  CHECK_THROWS_AS(AjlParams(1.2, 3), DomainError);        // sin(3.6) < 0
  const AjlParams p(0.4, 3);
  CHECK(p.d() == doctest::Approx(2.0 * std::cos(0.4)));
  CHECK(std::abs(p.d() - (-p.A() * p.A() - 1.0 / (p.A() * p.A()))) <= 1e-12);
  CHECK(p.lambda(0) == 0.0);
}

TEST_CASE("lambda recurrence (L_{k-1} + L_{k+1}) / L_k == d") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> theta(0.01, kPi / 6.0 - 0.01);
  for (int trial = 0; trial < 50; ++trial) {
    const AjlParams p(theta(rng), 6);
    for (int k = 1; k <= 6; ++k) {
      CHECK(std::abs((p.lambda(k - 1) + p.lambda(k + 1)) / p.lambda(k) - p.d()) <= 1e-12);
    }
  }
}

TEST_CASE("E_1 and E_2 on the 3-node graph") {
  const PathBasis basis = admissible_states(LineGraph(3), 3);
  const double theta = 0.5;
  const AjlParams p(theta, 3);
  const double d = p.d();

  const ComplexMatrix e1 = build_e(1, p, basis);
  // E_1 |110> = 0, E_1 |101> = d |101>.
  CHECK(std::abs(e1(0, 0)) <= 1e-15);
  CHECK(std::abs(e1(1, 1) - d) <= 1e-12);
  CHECK(std::abs(e1(0, 1)) + std::abs(e1(1, 0)) <= 1e-15);

  // E_2 = |v><v| with v = (sqrt(1/d), sqrt(d - 1/d)) on (101, 110).
  const ComplexMatrix e2 = build_e(2, p, basis);
  const double v101 = std::sqrt(1.0 / d);
  const double v110 = std::sqrt(d - 1.0 / d);
  CHECK(std::abs(e2(1, 1) - v101 * v101) <= 1e-12);
  CHECK(std::abs(e2(0, 0) - v110 * v110) <= 1e-12);
  CHECK(std::abs(e2(0, 1) - v101 * v110) <= 1e-12);
  CHECK(std::abs(e2(1, 0) - v101 * v110) <= 1e-12);

  CHECK_THROWS_AS(build_e(3, p, basis), std::out_of_range);
}

TEST_CASE("property: path-model TL relations and traces") {
  const PathBasis basis = admissible_states(LineGraph(3), 3);
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> theta(1e-3, kPi / 3.0 - 1e-3);
  for (int trial = 0; trial < 100; ++trial) {
    const AjlParams p(theta(rng), 3);
    const ComplexMatrix e1 = build_e(1, p, basis);
    const ComplexMatrix e2 = build_e(2, p, basis);
    const double d = p.d();
    CHECK(max_abs_diff(e1 * e1, d * e1) <= 1e-12);
    CHECK(max_abs_diff(e2 * e2, d * e2) <= 1e-12);
    CHECK(max_abs_diff(e1 * e2 * e1, e1) <= 1e-12);
    CHECK(max_abs_diff(e2 * e1 * e2, e2) <= 1e-12);
    CHECK(std::abs(e1.trace() - d) <= 1e-12);
    CHECK(std::abs(e2.trace() - d) <= 1e-12);
    CHECK(std::abs((e1 * e2).trace() - 1.0) <= 1e-12);
    // <v(a)|v(a)> = d
    for (int a = 1; a <= 2; ++a) {
      CHECK(std::abs((p.lambda(a - 1) + p.lambda(a + 1)) / p.lambda(a) - d) <= 1e-12);
    }
  }
}

TEST_CASE("longer walks: E_i^2 = d E_i where the basis is closed under E_i") {
  // On the 4-node graph with theta = pi/5, L_5 = 0 so walks never need node 5.
  const AjlParams p(kPi / 5.0, 4);
  const PathBasis basis = admissible_states(LineGraph(4), 5);
  for (int i = 1; i <= 4; ++i) {
    const ComplexMatrix e = build_e(i, p, basis);
    CHECK(max_abs_diff(e * e, p.d() * e) <= 1e-12);
    CHECK(max_abs_diff(e, e.adjoint()) <= 1e-15);
  }
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix a = build_e(i, p, basis);
    const ComplexMatrix b = build_e(i + 1, p, basis);
    CHECK(max_abs_diff(a * b * a, a) <= 1e-12);
    CHECK(max_abs_diff(b * a * b, b) <= 1e-12);
  }
  for (int i = 1; i <= 2; ++i) {
    const ComplexMatrix a = build_e(i, p, basis);
    const ComplexMatrix c = build_e(i + 2, p, basis);
    CHECK(max_abs_diff(a * c, c * a) <= 1e-12);
  }
}

TEST_CASE("correspondence with the KL representation") {
  // E_1 vs U_1 at matched parameters: diag(0, d) -> diag(d, 0) after the swap.
  const double theta = 0.7;
  const PathBasis basis = admissible_states(LineGraph(3), 3);
  const AjlParams p(theta, 3);
  const ComplexMatrix perm = kl_basis_permutation();
  const ReprParams kl = ReprParams::from_theta(matched_kl_theta(theta));
  CHECK(std::abs(kl.delta - p.d()) <= 1e-12);
  CHECK(std::abs(kl.A - p.A()) <= 1e-12);
  const auto [u1, u2] = build_u(kl);
  CHECK(max_abs_diff(perm * build_e(1, p, basis) * perm.transpose(), u1) <= 1e-12);

  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> angle(1e-3, kPi / 3.0 - 1e-3);
  for (int k = 0; k < 25; ++k) CHECK(kl_correspondence_check(angle(rng)) <= 1e-12);

  // d -> 2 is approached as theta -> 0; theta = 0 itself is rejected.
  CHECK(kl_correspondence_check(1e-6) <= 1e-12);
  CHECK_THROWS_AS(kl_correspondence_check(0.0), DomainError);
  CHECK_THROWS_AS(kl_correspondence_check(1.5), DomainError);
}
