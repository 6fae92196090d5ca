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

#include "linalg.hpp"
#include "model.hpp"

#include <cstddef>
#include <vector>

namespace qeet {

struct BipartiteDims {
  std::size_t a;
  std::size_t b;
};

/// Singular values of the coefficient matrix c[m][n] = <m n|psi>, descending.
struct SchmidtSpectrum {
  linalg::RealVector values;
};

/// Schmidt values below this are treated as exact zeros in the entropy.
inline constexpr double kSchmidtZero = 1e-12;

/// Throws std::invalid_argument (with the measured norm) unless |psi| = 1
/// within 1e-10.
SchmidtSpectrum schmidt_values(const linalg::ComplexVector& psi, BipartiteDims dims);

/// -sum s_k^2 log2 s_k^2, in bits.
double entropy_of_entanglement(const SchmidtSpectrum& spectrum);

enum class KeptSubsystem { A, B };

/// Eigenvalues of Tr_B |psi><psi| (or Tr_A), descending.
std::vector<double> reduced_density_eigenvalues(const linalg::ComplexVector& psi,
                                                BipartiteDims dims,
                                                KeptSubsystem keep = KeptSubsystem::A);

struct TraceSample {
  double gamma2;
  double entropy;
};

struct EntanglementTrace {
  double gamma = 0.0;
  Truncation truncation = Truncation::FourLevel;
  std::vector<TraceSample> samples;
};

} // namespace qeet
