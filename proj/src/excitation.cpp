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

#include "excitation.hpp"

#include <cmath>
#include <stdexcept>

namespace qeet {

DriveGenerator build_drive_generator(const QuditModel& model, const DimensionlessParams& params) {
  validate(model);
  validate(params);
  const auto d = static_cast<Eigen::Index>(model.dimension());
  const auto& levels = model.level_ratios;
  const double delta = params.delta;
  const double drive = params.drive_ratio;

  linalg::ComplexMatrix m = linalg::ComplexMatrix::Zero(d, d);
  m(0, 0) = delta * drive;
  m(1, 1) = delta * levels[1];
  if (d > 2) {
    m(2, 2) = delta * levels[2];
  }
  if (d > 3) {
    m(3, 3) = delta * (levels[3] - drive);
  }
  const auto transitions = transitions_for(model.dimension());
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const double coupling = params.gamma * model.dipole_ratios[i];
    m(transitions[i].lower, transitions[i].upper) = coupling;
    m(transitions[i].upper, transitions[i].lower) = coupling;
  }
  return DriveGenerator{std::move(m)};
}

linalg::ComplexMatrix rotating_frame_unitary(std::size_t dimension,
                                             const DimensionlessParams& params,
                                             double phase_time) {
  if (dimension < 2 || dimension > 4) {
    throw std::invalid_argument("rotating_frame_unitary: dimension must be 2, 3 or 4");
  }
  const double angle = params.delta * params.drive_ratio * phase_time;
  const auto d = static_cast<Eigen::Index>(dimension);
  linalg::ComplexMatrix u = linalg::ComplexMatrix::Identity(d, d);
  u(0, 0) = std::polar(1.0, angle);
  if (d > 3) {
    u(3, 3) = std::polar(1.0, -angle);
  }
  return u;
}

StateVector prepare_initial_state(const QuditModel& model, const DimensionlessParams& params) {
  const auto d = static_cast<Eigen::Index>(model.dimension());
  if (model.truncation == Truncation::SingleExcitonManifold) {
    validate(model);
    StateVector excited = StateVector::Zero(d);
    excited(1) = 1.0;
    return excited;
  }
  const DriveGenerator generator = build_drive_generator(model, params);
  StateVector ground = StateVector::Zero(d);
  ground(0) = 1.0;
  // U(0) is the identity, so only the frame exit at t = T acts.
  const linalg::ComplexMatrix exit_frame = rotating_frame_unitary(model.dimension(), params, 1.0);
  return exit_frame.adjoint() * (linalg::propagator(generator.matrix, 1.0) * ground);
}

std::vector<double> populations(const StateVector& psi) {
  std::vector<double> out(static_cast<std::size_t>(psi.size()));
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::norm(psi(i));
  }
  return out;
}

} // namespace qeet
