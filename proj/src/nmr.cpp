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

#include "jonesnmr/nmr.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "jonesnmr/errors.hpp"

namespace jonesnmr::nmr {

double DensityOperator::trace_deviation() const { return std::abs(matrix.trace() - 1.0); }

double DensityOperator::hermiticity_deviation() const {
  return max_abs_diff(matrix, matrix.adjoint());
}

namespace {

ComplexMatrix half_pauli(char axis) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  switch (axis) {
    case 'x':
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 'y':
      s << 0.0, -kI, kI, 0.0;
      break;
    case 'z':
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw std::invalid_argument(std::string("unknown axis '") + axis + "'");
  }
  return 0.5 * s;
}

Eigen::Index register_dim(int m) { return Eigen::Index{1} << m; }

}  // namespace

ComplexMatrix product_operator(int qubit, int m, char axis) {
  if (m < 1 || qubit < 1 || qubit > m) throw std::out_of_range("product_operator: bad qubit index");
  ComplexMatrix op = ComplexMatrix::Identity(1, 1);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix s = half_pauli(axis);
  for (int l = 1; l <= m; ++l) {
    ComplexMatrix next = Eigen::kroneckerProduct(op, l == qubit ? s : id2);
    op = std::move(next);
  }
  return op;
}

DensityOperator thermal_state(std::span<const double> alphas, int m) {
  if (static_cast<int>(alphas.size()) != m) {
    throw DimensionError("thermal_state: need one polarisation per qubit");
  }
  const Eigen::Index dim = register_dim(m);
  ComplexMatrix rho = ComplexMatrix::Identity(dim, dim);
  for (int l = 1; l <= m; ++l) rho -= alphas[l - 1] * product_operator(l, m, 'z');
  return {m, rho / static_cast<double>(dim)};
}

DensityOperator prepare_rho1(int m, double alpha1) {
  if (m < 2) throw std::invalid_argument("prepare_rho1: need a probe and at least one work qubit");
  const Eigen::Index dim = register_dim(m);
  ComplexMatrix rho = ComplexMatrix::Identity(dim, dim) - alpha1 * product_operator(1, m, 'x');
  return {m, rho / static_cast<double>(dim)};
}

int work_qubits_for(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if (dim < 2 || (Eigen::Index{1} << n) != dim) {
    throw DimensionError("unitary dimension " + std::to_string(dim) + " is not a power of two");
  }
  return n;
}

ComplexMatrix controlled_u(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("controlled_u: U must be square");
  const Eigen::Index dim = u.rows();
  const double dev = max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(dim, dim));
  if (!(dev <= kUnitaryTol)) {
    throw DomainError("controlled_u: U is not unitary (deviation " + std::to_string(dev) + ")");
  }
  ComplexMatrix cu = ComplexMatrix::Zero(2 * dim, 2 * dim);
  cu.topLeftCorner(dim, dim).setIdentity();
  cu.bottomRightCorner(dim, dim) = u;
  return cu;
}

DensityOperator apply_cu(const DensityOperator& rho1, const ComplexMatrix& u) {
  if (2 * u.rows() != rho1.matrix.rows()) {
    throw DimensionError("apply_cu: U of dimension " + std::to_string(u.rows()) +
                         " does not fit a register of dimension " +
                         std::to_string(rho1.matrix.rows()));
  }
  const ComplexMatrix cu = controlled_u(u);
  return {rho1.qubits, cu * rho1.matrix * cu.adjoint()};
}

Complex probe_signal(const DensityOperator& rho) {
  // I_1x + i I_1y = [[0, 1], [0, 0]] (x) 1, whose trace against rho picks
  // out the lower-left block.
  const Eigen::Index half = rho.matrix.rows() / 2;
  return rho.matrix.bottomLeftCorner(half, half).trace();
}

Complex calibration_constant(int work_qubits, double alpha1) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, Complex> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(work_qubits, alpha1);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const Eigen::Index dim = register_dim(work_qubits);
  const DensityOperator rho2 =
      apply_cu(prepare_rho1(work_qubits + 1, alpha1), ComplexMatrix::Identity(dim, dim));
  const Complex c = probe_signal(rho2) / static_cast<double>(dim);
  if (std::abs(c) == 0.0) throw DomainError("calibration constant vanishes (alpha1 = 0?)");
  cache.emplace(key, c);
  return c;
}

double trace_error_bound(int work_qubits, const EvqcPrecision& prec) {
  return std::sqrt(2.0) * prec.epsilon * kProbeLambda /
         std::abs(calibration_constant(work_qubits, prec.alpha1));
}

EvqcSimulator::EvqcSimulator(EvqcPrecision prec) : prec_(prec), rng_(prec.seed) {
  if (!(prec_.epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (!(prec_.alpha1 > 0.0)) throw std::invalid_argument("alpha1 must be > 0");
}

double EvqcSimulator::uniform_symmetric() {
  // 53 random mantissa bits mapped onto [-1, 1]; fixed so that output bytes
  // do not depend on the standard library's distribution implementation.
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

Complex EvqcSimulator::measure_probe(const DensityOperator& rho2) {
  const Complex exact = probe_signal(rho2);
  if (prec_.epsilon == 0.0) return exact;
  const double spread = prec_.epsilon * kProbeLambda;
  const double re = spread * uniform_symmetric();
  const double im = spread * uniform_symmetric();
  return exact + Complex(re, im);
}

Complex EvqcSimulator::estimate_trace(const ComplexMatrix& u) {
  const int n = work_qubits_for(u.rows());
  const DensityOperator rho2 = apply_cu(prepare_rho1(n + 1, prec_.alpha1), u);
  return measure_probe(rho2) / calibration_constant(n, prec_.alpha1);
}

Complex measure_probe(const DensityOperator& rho2, const EvqcPrecision& prec) {
  return EvqcSimulator(prec).measure_probe(rho2);
}

Complex estimate_trace(const ComplexMatrix& u, const EvqcPrecision& prec) {
  return EvqcSimulator(prec).estimate_trace(u);
}

}  // namespace jonesnmr::nmr
