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


#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "jonesnmr/errors.hpp"
#include "jonesnmr/nmr.hpp"
#include "jonesnmr/tl_rep.hpp"
#include "test_support.hpp"

using namespace jonesnmr;
using namespace jonesnmr::nmr;

TEST_CASE("thermal_state") {
  const std::vector<double> zero{0.0};
  CHECK(max_abs_diff(thermal_state(zero, 1).matrix, 0.5 * ComplexMatrix::Identity(2, 2)) <= 1e-15);

  const double a = 0.3;
  const std::vector<double> one{a};
  CHECK(max_abs_diff(thermal_state(one, 1).matrix,
                     testing::diag2((1.0 - a / 2.0) / 2.0, (1.0 + a / 2.0) / 2.0)) <= 1e-15);

  const std::vector<double> two{0.4, 0.7};
  const DensityOperator rho = thermal_state(two, 2);
  CHECK(rho.trace_deviation() <= 1e-12);
  CHECK(rho.hermiticity_deviation() <= 1e-12);
  CHECK_THROWS_AS(thermal_state(two, 3), DimensionError);
}

TEST_CASE("prepare_rho1") {
  CHECK(max_abs_diff(prepare_rho1(2, 0.0).matrix, 0.25 * ComplexMatrix::Identity(4, 4)) <= 1e-15);
  const DensityOperator rho = prepare_rho1(2, 1.0);
  CHECK(max_abs_diff(rho.matrix.topRightCorner(2, 2), -0.125 * ComplexMatrix::Identity(2, 2)) <= 1e-15);
  CHECK(max_abs_diff(rho.matrix.bottomLeftCorner(2, 2), -0.125 * ComplexMatrix::Identity(2, 2)) <= 1e-15);
  CHECK(rho.trace_deviation() <= 1e-12);
  CHECK(rho.hermiticity_deviation() <= 1e-12);
  CHECK_THROWS_AS(prepare_rho1(1, 1.0), std::invalid_argument);
}

TEST_CASE("controlled_u") {
  CHECK(max_abs_diff(controlled_u(ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix x(2, 2), cnot = ComplexMatrix::Zero(4, 4);
  x << 0.0, 1.0, 1.0, 0.0;
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  CHECK(max_abs_diff(controlled_u(x), cnot) == 0.0);

  const ComplexMatrix s1 = rho_generator({1, 1}, ReprParams::from_theta(0.0));
  ComplexMatrix expected = ComplexMatrix::Identity(4, 4);
  expected(2, 2) = -1.0;
  CHECK(max_abs_diff(controlled_u(s1), expected) <= 1e-15);

  CHECK_THROWS_AS(controlled_u(2.0 * ComplexMatrix::Identity(2, 2)), DomainError);
  CHECK_THROWS_AS(controlled_u(ComplexMatrix::Identity(2, 3)), DimensionError);
}

TEST_CASE("apply_cu block structure") {
  std::mt19937_64 rng(51);
  for (int n = 1; n <= 3; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const double big_n = 2.0 * static_cast<double>(dim);
    for (int trial = 0; trial < 20; ++trial) {
      const double alpha = 0.2 + 0.1 * trial;
      const ComplexMatrix u = testing::random_unitary(dim, rng);
      const DensityOperator rho2 = apply_cu(prepare_rho1(n + 1, alpha), u);
      CHECK(max_abs_diff(rho2.matrix.bottomLeftCorner(dim, dim), -(alpha / (2.0 * big_n)) * u) <= 1e-12);
      CHECK(max_abs_diff(rho2.matrix.topRightCorner(dim, dim),
                         -(alpha / (2.0 * big_n)) * u.adjoint()) <= 1e-12);
      CHECK(rho2.trace_deviation() <= 1e-12);
      CHECK(rho2.hermiticity_deviation() <= 1e-12);
    }
  }
  const DensityOperator rho1 = prepare_rho1(2, 1.0);
  CHECK(max_abs_diff(apply_cu(rho1, ComplexMatrix::Identity(2, 2)).matrix, rho1.matrix) <= 1e-15);
  CHECK_THROWS_AS(apply_cu(rho1, ComplexMatrix::Identity(4, 4)), DimensionError);
}

TEST_CASE("probe signal and calibration") {
  const DensityOperator mixed{2, 0.25 * ComplexMatrix::Identity(4, 4)};
  CHECK(std::abs(probe_signal(mixed)) == 0.0);
  for (int n = 1; n <= 3; ++n) {
    const double big_n = std::ldexp(1.0, n + 1);
    CHECK(std::abs(calibration_constant(n, 0.5) + 0.5 / (2.0 * big_n)) <= 1e-15);
  }
}

TEST_CASE("estimate_trace is exact without noise") {
  const EvqcPrecision exact{};
  CHECK(std::abs(estimate_trace(ComplexMatrix::Identity(2, 2), exact) - 2.0) <= 1e-12);
  CHECK(std::abs(estimate_trace(testing::diag2(1.0, -1.0), exact)) <= 1e-12);
  const ComplexMatrix tre = rho_word(parse_braid("s1^3", 3), ReprParams::from_theta(0.0));
  CHECK(std::abs(estimate_trace(tre, exact)) <= 1e-12);

  std::mt19937_64 rng(52);
  for (Eigen::Index dim : {2, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix u = testing::random_unitary(dim, rng);
      CHECK(std::abs(estimate_trace(u, exact) - u.trace()) <= 1e-10);
    }
  }
  CHECK_THROWS_AS(estimate_trace(ComplexMatrix::Identity(3, 3), exact), DimensionError);
}

TEST_CASE("noisy estimates stay inside the calibrated bound") {
  std::mt19937_64 rng(53);
  for (double eps : {1e-3, 1e-2}) {
    for (Eigen::Index dim : {2, 4}) {
      const int n = work_qubits_for(dim);
      const double bound = trace_error_bound(n, {eps, 1.0, 0});
      // sqrt(2) eps / |c| with |c| = alpha1 / (2 N).
      CHECK(bound == doctest::Approx(2.0 * std::sqrt(2.0) * std::ldexp(1.0, n + 1) * eps));
      double worst = 0.0;
      for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const ComplexMatrix u = testing::random_unitary(dim, rng);
        const double err = std::abs(estimate_trace(u, {eps, 1.0, seed}) - u.trace());
        worst = std::max(worst, err);
        CHECK(err <= bound * (1.0 + 1e-12));
      }
      // The bound is tight up to sampling: the worst case uses most of it.
      CHECK(worst >= 0.5 * bound);
    }
  }
}

TEST_CASE("simulator reproducibility") {
  const ComplexMatrix u = rho_generator({2, 1}, ReprParams::from_theta(0.2));
  const EvqcPrecision prec{1e-2, 1.0, 99};
  EvqcSimulator a(prec), b(prec);
  for (int k = 0; k < 10; ++k) CHECK(a.estimate_trace(u) == b.estimate_trace(u));
  CHECK(estimate_trace(u, prec) == estimate_trace(u, prec));
  CHECK(estimate_trace(u, prec) != estimate_trace(u, {1e-2, 1.0, 100}));
  CHECK_THROWS_AS(EvqcSimulator({-1.0, 1.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(EvqcSimulator({0.1, 0.0, 0}), std::invalid_argument);
}

TEST_CASE("product_operator") {
  const ComplexMatrix ix = product_operator(1, 2, 'x');
  CHECK(ix(0, 2) == Complex(0.5, 0.0));
  CHECK(ix(1, 3) == Complex(0.5, 0.0));
  ComplexMatrix z2 = ComplexMatrix::Zero(4, 4);
  z2.diagonal() << 0.5, -0.5, 0.5, -0.5;
  CHECK(max_abs_diff(product_operator(2, 2, 'z'), z2) == 0.0);
  CHECK_THROWS_AS(product_operator(3, 2, 'x'), std::out_of_range);
  CHECK_THROWS_AS(product_operator(1, 2, 'q'), std::invalid_argument);
}
