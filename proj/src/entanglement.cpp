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

#include "entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qeet {

namespace {

constexpr double kNormTolerance = 1e-10;

linalg::ComplexMatrix coefficient_matrix(const linalg::ComplexVector& psi, BipartiteDims dims) {
  const auto da = static_cast<Eigen::Index>(dims.a);
  const auto db = static_cast<Eigen::Index>(dims.b);
  if (da < 1 || db < 1 || psi.size() != da * db) {
    std::ostringstream msg;
    msg << "state of dimension " << psi.size() << " does not factor as " << dims.a << "x"
        << dims.b;
    throw std::invalid_argument(msg.str());
  }
  linalg::ComplexMatrix c(da, db);
  for (Eigen::Index m = 0; m < da; ++m) {
    for (Eigen::Index n = 0; n < db; ++n) {
      c(m, n) = psi(m * db + n);
    }
  }
  return c;
}

void require_unit_norm(const linalg::ComplexVector& psi, const char* where) {
  const double norm = psi.norm();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << where << ": state is not normalized, |psi| = " << norm;
    throw std::invalid_argument(msg.str());
  }
}

} // namespace

SchmidtSpectrum schmidt_values(const linalg::ComplexVector& psi, BipartiteDims dims) {
  require_unit_norm(psi, "schmidt_values");
  return SchmidtSpectrum{linalg::singular_values(coefficient_matrix(psi, dims))};
}

double entropy_of_entanglement(const SchmidtSpectrum& spectrum) {
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < spectrum.values.size(); ++k) {
    const double s = spectrum.values(k);
    if (s < kSchmidtZero) {
      continue;
    }
    const double p = s * s;
    entropy -= p * std::log2(p);
  }
  // p slightly above 1 from rounding would otherwise give -0 or -1e-16.
  return std::max(entropy, 0.0);
}

std::vector<double> reduced_density_eigenvalues(const linalg::ComplexVector& psi,
                                                BipartiteDims dims, KeptSubsystem keep) {
  require_unit_norm(psi, "reduced_density_eigenvalues");
  const linalg::ComplexMatrix c = coefficient_matrix(psi, dims);
  // rho_A = c c^dagger, rho_B = (c^dagger c)^T; the transpose leaves the
  // spectrum unchanged.
  linalg::ComplexMatrix rho =
      keep == KeptSubsystem::A ? linalg::ComplexMatrix(c * c.adjoint())
                               : linalg::ComplexMatrix((c.adjoint() * c).transpose());
  // Products are Hermitian only up to rounding.
  rho = (0.5 * (rho + rho.adjoint())).eval();
  const auto system = linalg::eig_hermitian(rho);
  std::vector<double> out(system.eigenvalues.data(),
                          system.eigenvalues.data() + system.eigenvalues.size());
  std::reverse(out.begin(), out.end());
  return out;
}

} // namespace qeet
