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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qeet {

enum class Truncation { FourLevel, ThreeLevel, TwoLevel, SingleExcitonManifold };

/// Levels kept by a truncation mode.
std::size_t dimension_of(Truncation mode);
std::string_view to_string(Truncation mode);
std::optional<Truncation> parse_truncation(std::string_view name);

/// A dipole-allowed transition lower <-> upper.
struct Transition {
  int lower;
  int upper;
  std::string_view label;
};

/// Allowed transitions in storage order: 0-1, 0-2, 1-3.
inline constexpr std::array<Transition, 3> kTransitions{{
    {0, 1, "d01"},
    {0, 2, "d02"},
    {1, 3, "d13"},
}};

/// One exchange term J |a b><c d| of the inter-qudit coupling (plus h.c.).
/// Indices are (qudit A level, qudit B level).
struct CouplingTerm {
  int a_bra_side;
  int b_bra_side;
  int a_ket_side;
  int b_ket_side;
  std::string_view label;

  int max_level() const;
};

/// Coupling terms in storage order: J_{10,01}, J_{20,02}, J_{20,01},
/// J_{10,02}, J_{13,31}, J_{11,30}, J_{11,03}, J_{12,30}.
inline constexpr std::array<CouplingTerm, 8> kCouplingTerms{{
    {1, 0, 0, 1, "J10_01"},
    {2, 0, 0, 2, "J20_02"},
    {2, 0, 0, 1, "J20_01"},
    {1, 0, 0, 2, "J10_02"},
    {1, 3, 3, 1, "J13_31"},
    {1, 1, 3, 0, "J11_30"},
    {1, 1, 0, 3, "J11_03"},
    {1, 2, 3, 0, "J12_30"},
}};

/// Transitions whose levels all survive in a d-level qudit.
std::vector<Transition> transitions_for(std::size_t dimension);
std::vector<CouplingTerm> coupling_terms_for(std::size_t dimension);

/// Identical-qudit model in units of omega (energies), d (dipoles) and |J|
/// (couplings).
struct QuditModel {
  std::vector<double> level_ratios;    // omega_n / omega, level_ratios[0] == 0
  std::vector<double> dipole_ratios;   // |d_nm| / d for transitions_for(dimension())
  std::vector<double> coupling_ratios; // J_term / J for coupling_terms_for(dimension())
  double coupling_sign = -1.0;         // sgn(J)
  Truncation truncation = Truncation::FourLevel;

  std::size_t dimension() const { return dimension_of(truncation); }

  friend bool operator==(const QuditModel&, const QuditModel&) = default;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const QuditModel& model);

QuditModel default_model();

/// Restricts a four-level model. Entries that survive are copied unchanged.
QuditModel truncate(const QuditModel& model, Truncation mode);

struct DimensionlessParams {
  double gamma = 0.41;       // E0 d T / hbar
  double delta = 29.9;       // omega T
  double gamma2_max = 5.0;   // upper end of the |J| t / hbar axis
  double r = 2392.0;         // omega hbar / |J|, so delta2 = r gamma2
  double drive_ratio = 1.0;  // omega_L / omega

  friend bool operator==(const DimensionlessParams&, const DimensionlessParams&) = default;
};

void validate(const DimensionlessParams& params);

DimensionlessParams default_params();

} // namespace qeet
