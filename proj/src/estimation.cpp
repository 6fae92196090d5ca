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

#include "estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace qeet::estimation {

namespace {

void fix_row_sign(Eigen::Matrix2d& vectors, int row) {
  const int pivot = std::abs(vectors(row, 1)) > std::abs(vectors(row, 0)) ? 1 : 0;
  if (vectors(row, pivot) < 0.0) {
    vectors.row(row) *= -1.0;
  }
}

ExcitonBasis relabel(const ExcitonBasis& basis, bool swap) {
  if (!swap) {
    return basis;
  }
  ExcitonBasis out;
  out.eigenvalues = {basis.eigenvalues[1], basis.eigenvalues[0]};
  out.vectors.row(0) = basis.vectors.row(1);
  out.vectors.row(1) = basis.vectors.row(0);
  return out;
}

double mean(double a, double b) { return 0.5 * (a + b); }

} // namespace

ExcitonBasis diagonalize_block(const FrenkelBlock& block) {
  const double e1 = block.site_energies[0];
  const double e2 = block.site_energies[1];
  const double v = block.coupling;
  const double centre = mean(e1, e2);
  const double half_gap = std::hypot(0.5 * (e1 - e2), v);
  // Mixing angle theta in (-pi/2, pi/2] from its double-angle components,
  // which keeps uncoupled blocks exact.
  double c = 1.0;
  double s = 0.0;
  if (half_gap > 0.0) {
    const double cos2 = 0.5 * (e1 - e2) / half_gap;
    const double sin2 = v / half_gap;
    if (cos2 >= 0.0) {
      c = std::sqrt(0.5 * (1.0 + cos2));
      s = 0.5 * sin2 / c;
    } else {
      s = (sin2 < 0.0 ? -1.0 : 1.0) * std::sqrt(0.5 * (1.0 - cos2));
      c = 0.5 * sin2 / s;
    }
  }

  ExcitonBasis out;
  out.eigenvalues = {centre - half_gap, centre + half_gap};
  out.vectors << -s, c, c, s;
  fix_row_sign(out.vectors, 0);
  fix_row_sign(out.vectors, 1);
  return out;
}

ExcitonCouplings exciton_couplings(const ExcitonBasis& basis_a, const ExcitonBasis& basis_b,
                                   const Eigen::Matrix4d& v) {
  if (!v.topLeftCorner<2, 2>().isZero(0.0) || !v.bottomRightCorner<2, 2>().isZero(0.0)) {
    throw std::invalid_argument("exciton_couplings: V must have zero intra-qudit blocks");
  }
  const Eigen::Matrix2d j = basis_a.vectors * v.topRightCorner<2, 2>() * basis_b.vectors.transpose();
  return ExcitonCouplings{
      .j10_01 = j(0, 0),
      .j20_02 = j(1, 1),
      .j10_02 = j(0, 1),
      .j20_01 = j(1, 0),
  };
}

TransitionDipoles transition_dipoles(const ExcitonBasis& basis,
                                     const std::array<Vec3, 2>& site_dipoles) {
  TransitionDipoles out;
  out.d10 = basis.vectors(0, 0) * site_dipoles[0] + basis.vectors(0, 1) * site_dipoles[1];
  out.d20 = basis.vectors(1, 0) * site_dipoles[0] + basis.vectors(1, 1) * site_dipoles[1];
  out.magnitude10 = out.d10.norm();
  out.magnitude20 = out.d20.norm();
  out.ratio = out.magnitude10 > 0.0 ? out.magnitude20 / out.magnitude10 : 0.0;
  return out;
}

double wavenumber_to_angular(double wavenumber) {
  return 2.0 * constants::kPi * constants::kSpeedOfLightCm * wavenumber;
}

PulseSpec default_pulse() {
  return PulseSpec{
      .energy = 5e-9,
      .duration = 10e-15,
      .cross_section = 2500.0 * constants::kPi * 1e-12,
      .dipole = 5.0 * constants::kDebye,
  };
}

double gamma_from_pulse(const PulseSpec& pulse) {
  if (!std::isfinite(pulse.energy) || pulse.energy < 0.0) {
    throw std::invalid_argument("gamma_from_pulse: pulse energy must be >= 0");
  }
  if (!(pulse.duration > 0.0) || !(pulse.cross_section > 0.0) || !(pulse.dipole > 0.0) ||
      !std::isfinite(pulse.duration) || !std::isfinite(pulse.cross_section) ||
      !std::isfinite(pulse.dipole)) {
    throw std::invalid_argument(
        "gamma_from_pulse: duration, cross section and dipole must be > 0");
  }
  const double field_term = 2.0 * pulse.energy * pulse.duration /
                            (constants::kSpeedOfLight * pulse.cross_section *
                             constants::kVacuumPermittivity);
  return pulse.dipole / constants::kHbar * std::sqrt(field_term);
}

EstimationInputs default_inputs() {
  EstimationInputs in;
  in.block_a = {{16050.0, 15808.0}, -87.0};
  in.block_b = {{16373.0, 15889.0}, 86.0};
  in.site_coupling << 0, 0, 4, -3,  //
      0, 0, 3, 8,                   //
      4, 3, 0, 0,                   //
      -3, 8, 0, 0;
  in.site_dipoles = {Vec3(-1.42, 4.54, -13.70), Vec3(13.58, 3.53, 1.78),
                     Vec3(1.50, 2.60, -14.20), Vec3(4.98, -12.51, -3.81)};
  return in;
}

EstimationReport estimate_table1(const EstimationInputs& in) {
  EstimationReport rep;
  rep.basis_a = diagonalize_block(in.block_a);
  rep.basis_b = diagonalize_block(in.block_b);
  rep.couplings = exciton_couplings(rep.basis_a, rep.basis_b, in.site_coupling);

  const std::array<std::pair<bool, bool>, 4> swaps{{{false, false}, {true, false}, {false, true}, {true, true}}};
  const std::array<const char*, 4> names{"energy_order", "swap_a", "swap_b", "swap_both"};
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    const auto [sa, sb] = swaps[i];
    rep.conventions[i] = LabelingConvention{
        names[i], sa, sb,
        exciton_couplings(relabel(rep.basis_a, sa), relabel(rep.basis_b, sb), in.site_coupling)};
  }

  rep.dipoles_a = transition_dipoles(rep.basis_a, {in.site_dipoles[0], in.site_dipoles[1]});
  rep.dipoles_b = transition_dipoles(rep.basis_b, {in.site_dipoles[2], in.site_dipoles[3]});

  // Identical qudits: the shared level energies and dipole strengths are the
  // means over A and B.
  for (int k = 0; k < 2; ++k) {
    rep.level_wavenumbers[k] = mean(rep.basis_a.eigenvalues[k], rep.basis_b.eigenvalues[k]);
    rep.level_angular[k] = wavenumber_to_angular(rep.level_wavenumbers[k]);
  }
  const double d10 = mean(rep.dipoles_a.magnitude10, rep.dipoles_b.magnitude10);
  const double d20 = mean(rep.dipoles_a.magnitude20, rep.dipoles_b.magnitude20);

  const double j = rep.couplings.j10_01;
  if (j == 0.0) {
    throw std::invalid_argument("estimate_table1: J_10,01 vanishes, ratios undefined");
  }
  if (d10 == 0.0) {
    throw std::invalid_argument("estimate_table1: |d10| vanishes, ratios undefined");
  }
  QuditModel& m = rep.model;
  m.truncation = Truncation::FourLevel;
  m.level_ratios = {0.0, 1.0, rep.level_wavenumbers[1] / rep.level_wavenumbers[0],
                    in.level3_ratio};
  m.dipole_ratios = {1.0, d20 / d10, in.dipole31_ratio};
  m.coupling_ratios = {1.0,
                       rep.couplings.j20_02 / j,
                       rep.couplings.j20_01 / j,
                       rep.couplings.j10_02 / j,
                       in.assigned_couplings[0],
                       in.assigned_couplings[1],
                       in.assigned_couplings[2],
                       in.assigned_couplings[3]};
  m.coupling_sign = j > 0.0 ? 1.0 : -1.0;
  validate(m);
  return rep;
}

std::vector<std::pair<std::string, double>> report_entries(const EstimationReport& rep) {
  std::vector<std::pair<std::string, double>> out;
  auto add = [&out](std::string key, double value) { out.emplace_back(std::move(key), value); };

  add("constants.hbar_J_s", constants::kHbar);
  add("constants.eps0_F_per_m", constants::kVacuumPermittivity);
  add("constants.c_m_per_s", constants::kSpeedOfLight);
  add("constants.debye_C_m", constants::kDebye);

  const std::array<std::pair<const char*, const ExcitonBasis*>, 2> bases{
      {{"qudit_a", &rep.basis_a}, {"qudit_b", &rep.basis_b}}};
  for (const auto& [name, basis] : bases) {
    const std::string p = std::string(name) + ".";
    add(p + "omega1_cm", basis->eigenvalues[0]);
    add(p + "omega2_cm", basis->eigenvalues[1]);
    add(p + "omega2_over_omega1", basis->eigenvalues[1] / basis->eigenvalues[0]);
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < 2; ++col) {
        add(p + "vector" + std::to_string(row + 1) + std::to_string(col + 1),
            basis->vectors(row, col));
      }
    }
  }

  add("levels.omega1_cm", rep.level_wavenumbers[0]);
  add("levels.omega2_cm", rep.level_wavenumbers[1]);
  add("levels.omega1_rad_per_s", rep.level_angular[0]);
  add("levels.omega2_rad_per_s", rep.level_angular[1]);

  for (const auto& conv : rep.conventions) {
    const std::string p = "couplings." + conv.name + ".";
    const auto& c = conv.couplings;
    add(p + "J10_01_cm", c.j10_01);
    add(p + "J20_02_cm", c.j20_02);
    add(p + "J10_02_cm", c.j10_02);
    add(p + "J20_01_cm", c.j20_01);
  }
  const auto& c = rep.couplings;
  add("couplings.J10_01_rad_per_s", wavenumber_to_angular(c.j10_01));
  add("couplings.J20_02_rad_per_s", wavenumber_to_angular(c.j20_02));
  add("couplings.J10_02_rad_per_s", wavenumber_to_angular(c.j10_02));
  add("couplings.J20_01_rad_per_s", wavenumber_to_angular(c.j20_01));
  add("couplings.r_omega_over_abs_J",
      rep.level_wavenumbers[0] / std::abs(c.j10_01));

  const std::array<std::pair<const char*, const TransitionDipoles*>, 2> dips{
      {{"qudit_a", &rep.dipoles_a}, {"qudit_b", &rep.dipoles_b}}};
  for (const auto& [name, d] : dips) {
    const std::string p = std::string("dipoles.") + name + ".";
    add(p + "d10_debye", d->magnitude10);
    add(p + "d20_debye", d->magnitude20);
    add(p + "d20_over_d10", d->ratio);
  }

  const auto& m = rep.model;
  add("ratios.omega2_over_omega1", m.level_ratios[2]);
  add("ratios.omega3_over_omega1.assigned", m.level_ratios[3]);
  add("ratios.d20_over_d10", m.dipole_ratios[1]);
  add("ratios.d31_over_d10.assigned", m.dipole_ratios[2]);
  add("ratios.J20_02_over_J", m.coupling_ratios[1]);
  add("ratios.J20_01_over_J", m.coupling_ratios[2]);
  add("ratios.J10_02_over_J", m.coupling_ratios[3]);
  add("ratios.J13_31_over_J.assigned", m.coupling_ratios[4]);
  add("ratios.J11_30_over_J.assigned", m.coupling_ratios[5]);
  add("ratios.J11_03_over_J.assigned", m.coupling_ratios[6]);
  add("ratios.J12_30_over_J.assigned", m.coupling_ratios[7]);
  add("ratios.coupling_sign", m.coupling_sign);
  return out;
}

} // namespace qeet::estimation
