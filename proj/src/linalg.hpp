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

// Dense complex linear algebra for the small (d <= 16) Hilbert spaces used by
// the simulator. Eigen carries the storage and the factorizations; this layer
// fixes the contracts (ordering, phase convention, validation).

#include <Eigen/Dense>

#include <complex>

namespace qeet::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Max-abs deviation of H - H^dagger accepted by eig_hermitian.
inline constexpr double kHermitianTolerance = 1e-12;
/// Bound on Q diag(lambda) Q^dagger - H and Q^dagger Q - I (max-abs entrywise).
inline constexpr double kReconstructionTolerance = 1e-10;

struct HermitianEigenSystem {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns; largest-magnitude component real, > 0
};

struct AsymmetryEntry {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  double deviation = 0.0;
};

/// Largest |H(i,j) - conj(H(j,i))| over the matrix.
AsymmetryEntry max_hermitian_deviation(const ComplexMatrix& h);

/// Throws std::invalid_argument for non-square, non-finite or non-Hermitian
/// input. The message names the worst asymmetry entry.
HermitianEigenSystem eig_hermitian(const ComplexMatrix& h);

/// exp(-i H tau) via the spectral decomposition of H.
ComplexMatrix propagator(const ComplexMatrix& h, double tau);
ComplexMatrix propagator(const HermitianEigenSystem& system, double tau);

/// Singular values, descending.
RealVector singular_values(const ComplexMatrix& c);

} // namespace qeet::linalg
