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

// Classical-light excitation of qudit A in the co-rotating frame. Energies
// are pre-multiplied by the pulse duration T, so the drive acts for unit
// dimensionless time.

#include "linalg.hpp"
#include "model.hpp"

#include <vector>

namespace qeet {

using StateVector = linalg::ComplexVector;

/// M = H_cr T / hbar in the rotating-wave approximation.
struct DriveGenerator {
  linalg::ComplexMatrix matrix;
};

DriveGenerator build_drive_generator(const QuditModel& model, const DimensionlessParams& params);

/// diag(e^{+i delta_L t}, 1, 1, e^{-i delta_L t}) restricted to `dimension`
/// levels, with delta_L = delta * drive_ratio and t in units of T.
linalg::ComplexMatrix rotating_frame_unitary(std::size_t dimension,
                                             const DimensionlessParams& params,
                                             double phase_time);

/// Qudit A after the pulse: U(1)^dagger exp(-i M) U(0) |0>, U(0) = I.
/// The single-exciton mode skips the drive and returns |1>.
StateVector prepare_initial_state(const QuditModel& model, const DimensionlessParams& params);

std::vector<double> populations(const StateVector& psi);

} // namespace qeet
