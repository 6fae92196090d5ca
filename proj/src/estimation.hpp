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

// Parameter estimation from a four-site Frenkel exciton Hamiltonian: two
// strongly coupled site pairs (qudits A and B) weakly coupled through V.
// Energies are in wavenumbers (cm^-1), dipoles in Debye.

#include "model.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qeet::estimation {

namespace constants {
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHbar = 1.054571817e-34;          // J s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F / m
inline constexpr double kSpeedOfLight = 299792458.0;      // m / s
inline constexpr double kSpeedOfLightCm = 2.99792458e10; // cm / s
inline constexpr double kDebye = 3.33564e-30;             // C m
} // namespace constants

using Vec3 = Eigen::Vector3d;

/// [[e1, v], [v, e2]] in cm^-1.
struct FrenkelBlock {
  std::array<double, 2> site_energies;
  double coupling;
};

/// Rows of `vectors` are the exciton states |1>, |2> in the site basis.
struct ExcitonBasis {
  std::array<double, 2> eigenvalues; // ascending
  Eigen::Matrix2d vectors;
};

/// Closed-form 2x2 diagonalization. Lower eigenvalue is |1>; each row has its
/// largest-magnitude component positive.
ExcitonBasis diagonalize_block(const FrenkelBlock& block);

/// <j|_A V |k>_B for the four exciton pairs, cm^-1.
struct ExcitonCouplings {
  double j10_01 = 0.0;
  double j20_02 = 0.0;
  double j10_02 = 0.0;
  double j20_01 = 0.0;
};

/// V is the 4x4 site coupling (A1, A2, B1, B2) with zero diagonal blocks.
ExcitonCouplings exciton_couplings(const ExcitonBasis& basis_a, const ExcitonBasis& basis_b,
                                   const Eigen::Matrix4d& v);

struct TransitionDipoles {
  Vec3 d10;
  Vec3 d20;
  double magnitude10 = 0.0;
  double magnitude20 = 0.0;
  double ratio = 0.0; // |d20| / |d10|, 0 when |d10| = 0
};

TransitionDipoles transition_dipoles(const ExcitonBasis& basis,
                                     const std::array<Vec3, 2>& site_dipoles);

/// omega = 2 pi c nu.
double wavenumber_to_angular(double wavenumber);

struct PulseSpec {
  double energy;        // J
  double duration;      // s
  double cross_section; // m^2
  double dipole;        // C m
};

/// Typical pulse: 5 nJ, 10 fs, 2500 pi um^2, 5 D.
PulseSpec default_pulse();

/// gamma = (d / hbar) sqrt(2 W T / (c A eps0)). W = 0 gives 0; negative W and
/// non-positive T, A, d are rejected.
double gamma_from_pulse(const PulseSpec& pulse);

struct EstimationInputs {
  FrenkelBlock block_a;
  FrenkelBlock block_b;
  Eigen::Matrix4d site_coupling;
  std::array<Vec3, 4> site_dipoles; // A1, A2, B1, B2
  // Assigned rather than computed.
  double level3_ratio = 2.0;        // omega_3 / omega_1
  double dipole31_ratio = 1.0;      // |d31| / |d10|
  std::array<double, 4> assigned_couplings{0.90, 0.81, 0.81, 0.76}; // J13_31, J11_30, J11_03, J12_30
};

/// Site energies, couplings and dipoles the simulator defaults derive from.
EstimationInputs default_inputs();

/// Coupling values for one choice of which exciton is labelled |1>.
struct LabelingConvention {
  std::string name;
  bool swap_a;
  bool swap_b;
  ExcitonCouplings couplings;
};

struct EstimationReport {
  ExcitonBasis basis_a;
  ExcitonBasis basis_b;
  std::array<double, 2> level_wavenumbers; // mean of A and B, cm^-1
  std::array<double, 2> level_angular;     // rad / s
  ExcitonCouplings couplings;              // energy-ordered labels, cm^-1
  std::array<LabelingConvention, 4> conventions;
  TransitionDipoles dipoles_a;
  TransitionDipoles dipoles_b;
  QuditModel model;
};

EstimationReport estimate_table1(const EstimationInputs& inputs);

/// Flat, ordered key/value view of a report for machine-readable output.
std::vector<std::pair<std::string, double>> report_entries(const EstimationReport& report);

} // namespace qeet::estimation
