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

#pragma once

#include "excitation.hpp"
#include "linalg.hpp"
#include "model.hpp"

#include <cstddef>
#include <vector>

namespace qeet {

/// H_2 / (hbar |J|) = r * free_part + coupling_part on the d^2-dimensional
/// pair space, basis index m * d + n for |m>_A |n>_B.
struct JointGenerator {
  std::size_t qudit_dimension = 0;
  linalg::ComplexMatrix free_part;     // diagonal, (omega_m + omega_n) / omega
  linalg::ComplexMatrix coupling_part; // signed exchange terms in units of |J|
};

JointGenerator build_joint_generator(const QuditModel& model);

/// Ascending gamma2 sample points starting at 0.
class EvolutionGrid {
public:
  /// `count` evenly spaced points on [0, gamma2_max]; count == 1 gives {0}.
  static EvolutionGrid uniform(double gamma2_max, std::size_t count);
  /// Arbitrary points; must start at 0 and ascend strictly.
  static EvolutionGrid from_values(std::vector<double> values);

  /// The same points with every interval midpoint inserted.
  EvolutionGrid refined() const;

  const std::vector<double>& values() const { return values_; }
  std::size_t count() const { return values_.size(); }
  double max() const { return values_.back(); }

private:
  explicit EvolutionGrid(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

/// Closed-form evolution exp(-i (r D + C) gamma2) (psi_a (x) |0>_B) from one
/// eigendecomposition. Immutable after construction; safe to share.
class PairEvolver {
public:
  PairEvolver(const JointGenerator& generator, double r);

  /// Eigendecomposition reused from another evolver for the same generator.
  PairEvolver(const JointGenerator& generator, double r, linalg::HermitianEigenSystem system);

  std::size_t qudit_dimension() const { return qudit_dimension_; }
  const linalg::ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  const linalg::HermitianEigenSystem& eigensystem() const { return system_; }

  /// A pair state seeded from psi_a, ready for state_at.
  class Seed {
  public:
    const StateVector& initial() const { return initial_; }

  private:
    friend class PairEvolver;
    StateVector initial_;
    linalg::ComplexVector eigen_amplitudes_;
  };

  Seed seed(const StateVector& psi_a) const;

  /// State at gamma2. gamma2 == 0 returns the seed state unchanged.
  StateVector state_at(const Seed& seed, double gamma2) const;

  /// <psi|(r D + C)|psi>.
  double energy(const StateVector& psi) const;

private:
  std::size_t qudit_dimension_;
  linalg::ComplexMatrix hamiltonian_;
  linalg::HermitianEigenSystem system_;
};

/// psi_a (x) |0>_B.
StateVector pair_with_ground(const StateVector& psi_a, std::size_t qudit_dimension);

/// States on every grid point, one eigendecomposition for the whole grid.
std::vector<StateVector> evolve_pair(const JointGenerator& generator, const StateVector& psi_a,
                                     const EvolutionGrid& grid, const DimensionlessParams& params);

} // namespace qeet
