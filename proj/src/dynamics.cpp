// Copyright 2026 The qudit-eet Authors
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

#include "dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qeet {

namespace {

constexpr double kNormTolerance = 1e-10;

Eigen::Index pair_index(int a, int b, std::size_t d) {
  return static_cast<Eigen::Index>(a) * static_cast<Eigen::Index>(d) + b;
}

} // namespace

JointGenerator build_joint_generator(const QuditModel& model) {
  validate(model);
  const std::size_t d = model.dimension();
  const auto n = static_cast<Eigen::Index>(d * d);

  JointGenerator gen;
  gen.qudit_dimension = d;
  gen.free_part = linalg::ComplexMatrix::Zero(n, n);
  gen.coupling_part = linalg::ComplexMatrix::Zero(n, n);
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto i = pair_index(static_cast<int>(m), static_cast<int>(k), d);
      gen.free_part(i, i) = model.level_ratios[m] + model.level_ratios[k];
    }
  }
  const auto terms = coupling_terms_for(d);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    const auto bra = pair_index(term.a_bra_side, term.b_bra_side, d);
    const auto ket = pair_index(term.a_ket_side, term.b_ket_side, d);
    const double value = model.coupling_sign * model.coupling_ratios[t];
    gen.coupling_part(bra, ket) += value;
    gen.coupling_part(ket, bra) += value;
  }
  return gen;
}

EvolutionGrid EvolutionGrid::uniform(double gamma2_max, std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("EvolutionGrid: count must be >= 1");
  }
  if (!std::isfinite(gamma2_max) || gamma2_max < 0.0) {
    throw std::invalid_argument("EvolutionGrid: gamma2_max must be finite and >= 0");
  }
  if (count > 1 && gamma2_max == 0.0) {
    throw std::invalid_argument("EvolutionGrid: several samples need gamma2_max > 0");
  }
  std::vector<double> values(count, 0.0);
  for (std::size_t i = 1; i < count; ++i) {
    values[i] = gamma2_max * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return EvolutionGrid(std::move(values));
}

EvolutionGrid EvolutionGrid::from_values(std::vector<double> values) {
  if (values.empty() || values.front() != 0.0) {
    throw std::invalid_argument("EvolutionGrid: first value must be 0");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1]) || !std::isfinite(values[i])) {
      throw std::invalid_argument("EvolutionGrid: values must ascend strictly");
    }
  }
  return EvolutionGrid(std::move(values));
}

EvolutionGrid EvolutionGrid::refined() const {
  std::vector<double> out;
  out.reserve(2 * values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) {
      out.push_back(0.5 * (values_[i - 1] + values_[i]));
    }
    out.push_back(values_[i]);
  }
  return EvolutionGrid(std::move(out));
}

PairEvolver::PairEvolver(const JointGenerator& generator, double r)
    : qudit_dimension_(generator.qudit_dimension),
      hamiltonian_(r * generator.free_part + generator.coupling_part),
      system_(linalg::eig_hermitian(hamiltonian_)) {}

PairEvolver::PairEvolver(const JointGenerator& generator, double r,
                         linalg::HermitianEigenSystem system)
    : qudit_dimension_(generator.qudit_dimension),
      hamiltonian_(r * generator.free_part + generator.coupling_part),
      system_(std::move(system)) {}

StateVector pair_with_ground(const StateVector& psi_a, std::size_t qudit_dimension) {
  const auto d = static_cast<Eigen::Index>(qudit_dimension);
  if (psi_a.size() != d) {
    std::ostringstream msg;
    msg << "pair_with_ground: state has dimension " << psi_a.size() << ", expected " << d;
    throw std::invalid_argument(msg.str());
  }
  StateVector out = StateVector::Zero(d * d);
  for (Eigen::Index m = 0; m < d; ++m) {
    out(m * d) = psi_a(m);
  }
  return out;
}

PairEvolver::Seed PairEvolver::seed(const StateVector& psi_a) const {
  const double norm = psi_a.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "PairEvolver: initial state norm is " << norm;
    throw std::invalid_argument(msg.str());
  }
  Seed s;
  s.initial_ = pair_with_ground(psi_a, qudit_dimension_);
  s.eigen_amplitudes_ = system_.eigenvectors.adjoint() * s.initial_;
  return s;
}

StateVector PairEvolver::state_at(const Seed& seed, double gamma2) const {
  if (gamma2 == 0.0) {
    return seed.initial_;
  }
  const auto n = seed.eigen_amplitudes_.size();
  linalg::ComplexVector rotated(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    rotated(k) = std::polar(1.0, -system_.eigenvalues(k) * gamma2) * seed.eigen_amplitudes_(k);
  }
  return system_.eigenvectors * rotated;
}

double PairEvolver::energy(const StateVector& psi) const {
  return psi.dot(hamiltonian_ * psi).real();
}

std::vector<StateVector> evolve_pair(const JointGenerator& generator, const StateVector& psi_a,
                                     const EvolutionGrid& grid, const DimensionlessParams& params) {
  validate(params);
  const PairEvolver evolver(generator, params.r);
  const auto s = evolver.seed(psi_a);
  std::vector<StateVector> out;
  out.reserve(grid.count());
  for (double g2 : grid.values()) {
    out.push_back(evolver.state_at(s, g2));
  }
  return out;
}

} // namespace qeet
