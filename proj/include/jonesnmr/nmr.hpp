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

#include <cstdint>
#include <random>
#include <span>

#include "jonesnmr/types.hpp"

// Ensemble (expectation-value) quantum computer that estimates tr(U) with a
// single controlled-U and one measurement of <I_1x + i I_1y>.
//
// Qubit 1 is the probe and the most significant tensor factor, so operators
// on it have the 2x2 block form used below. N = 2^m for m qubits.
namespace jonesnmr::nmr {

/// Tolerance on U^dagger U - I accepted by controlled_u.
inline constexpr double kUnitaryTol = 1e-10;

struct DensityOperator {
  int qubits = 0;
  ComplexMatrix matrix;

  double trace_deviation() const;      // |tr rho - 1|
  double hermiticity_deviation() const;  // max |rho - rho^dagger|
};

/// Precision model of the EVQC: every measured expectation value x of an
/// observable M satisfies |x - Tr(M rho)| <= epsilon * Lambda(M).
struct EvqcPrecision {
  double epsilon = 0.0;
  double alpha1 = 1.0;  // probe polarisation
  std::uint64_t seed = 0;
};

/// 1/2 sigma_{x,y,z} on `qubit` (1-based) of an m-qubit register.
ComplexMatrix product_operator(int qubit, int m, char axis);

/// First-order thermal state (1/N)(1 - sum_l alpha_l I_lz). Positivity is
/// not enforced for large alpha.
DensityOperator thermal_state(std::span<const double> alphas, int m);

/// rho_1 = (1/N)(1 - alpha1 I_1x) on m >= 2 qubits.
DensityOperator prepare_rho1(int m, double alpha1);

/// Block matrix diag(1, U). Throws DomainError if U is not unitary to
/// kUnitaryTol, DimensionError if U is not square.
ComplexMatrix controlled_u(const ComplexMatrix& u);

/// rho_2 = cU rho_1 cU^dagger.
DensityOperator apply_cu(const DensityOperator& rho1, const ComplexMatrix& u);

/// Exact tr((I_1x + i I_1y) rho), i.e. the trace of the lower-left block.
Complex probe_signal(const DensityOperator& rho);

/// Lambda(I_1x) = Lambda(I_1y): spread of the eigenvalues +-1/2.
inline constexpr double kProbeLambda = 1.0;

/// Calibration constant c = z(U = 1) / 2^n for n work qubits: the factor
/// relating the probe signal to tr(U). Computed with epsilon = 0 and cached
/// for the lifetime of the process.
Complex calibration_constant(int work_qubits, double alpha1);

/// Hard bound on |estimate - tr(U)| implied by the precision model after
/// dividing by the calibration constant: sqrt(2) * epsilon * Lambda / |c|.
double trace_error_bound(int work_qubits, const EvqcPrecision& prec);

/// Simulator instance owning its random stream. Measurements perturb the
/// real and imaginary parts independently and uniformly within
/// [-epsilon * Lambda, +epsilon * Lambda]. Not thread-safe; use one instance
/// per thread.
class EvqcSimulator {
 public:
  explicit EvqcSimulator(EvqcPrecision prec);

  const EvqcPrecision& precision() const noexcept { return prec_; }

  /// Perturbed probe signal.
  Complex measure_probe(const DensityOperator& rho2);

  /// prepare_rho1 -> apply_cu -> measure_probe, divided by the calibration
  /// constant. With epsilon = 0 this reproduces tr(U) to rounding.
  Complex estimate_trace(const ComplexMatrix& u);

 private:
  double uniform_symmetric();

  EvqcPrecision prec_;
  std::mt19937_64 rng_;
};

/// One-shot versions seeded from prec.seed; identical seeds give identical
/// results.
Complex measure_probe(const DensityOperator& rho2, const EvqcPrecision& prec);
Complex estimate_trace(const ComplexMatrix& u, const EvqcPrecision& prec);

/// Number of work qubits n with 2^n == dim; throws DimensionError otherwise.
int work_qubits_for(Eigen::Index dim);

}  // namespace jonesnmr::nmr
