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

// Generators shared by the unit and acceptance tests.

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "jonesnmr/braid.hpp"
#include "jonesnmr/types.hpp"

namespace jonesnmr::testing {

// The five closed intervals of admissible angles, as written.
inline const std::array<std::pair<double, double>, 5> kAdmissibleIntervals = {{
    {0.0, kPi / 6.0},
    {kPi / 3.0, 2.0 * kPi / 3.0},
    {5.0 * kPi / 6.0, 7.0 * kPi / 6.0},
    {4.0 * kPi / 3.0, 5.0 * kPi / 3.0},
    {11.0 * kPi / 6.0, 2.0 * kPi},
}};

// Open gaps between them.
inline const std::array<std::pair<double, double>, 4> kGapIntervals = {{
    {kPi / 6.0, kPi / 3.0},
    {2.0 * kPi / 3.0, 5.0 * kPi / 6.0},
    {7.0 * kPi / 6.0, 4.0 * kPi / 3.0},
    {5.0 * kPi / 3.0, 11.0 * kPi / 6.0},
}};

inline double sample_admissible(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, kAdmissibleIntervals.size() - 1);
  const auto [lo, hi] = kAdmissibleIntervals[pick(rng)];
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Keeps `margin` away from the interval ends so the gap is strictly open.
inline double sample_gap(std::mt19937_64& rng, double margin = 1e-3) {
  std::uniform_int_distribution<std::size_t> pick(0, kGapIntervals.size() - 1);
  const auto [lo, hi] = kGapIntervals[pick(rng)];
  return std::uniform_real_distribution<double>(lo + margin, hi - margin)(rng);
}

// Haar-ish random unitary from the QR factorisation of a complex Gaussian
// matrix, with the phases of R's diagonal folded back in.
inline ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline BraidWord random_word(int strands, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<BraidGenerator> letters;
  for (int k = 0; k < length; ++k) letters.emplace_back(index(rng), positive(rng) ? 1 : -1);
  return BraidWord(strands, std::move(letters));
}

inline ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace jonesnmr::testing
