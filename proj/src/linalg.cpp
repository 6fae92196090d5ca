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

#include "linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qeet::linalg {

namespace {

void require_finite(const ComplexMatrix& m, const char* where) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw std::invalid_argument(std::string(where) + ": empty matrix");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(where) + ": non-finite entry");
  }
}

// Rotate each column so that its largest-magnitude component is real and
// positive. Ties resolve to the lowest index.
void fix_phases(ComplexMatrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double mag = std::abs(vectors(i, j));
      if (mag > best * (1.0 + 1e-12)) {
        best = mag;
        pivot = i;
      }
    }
    if (best > 0.0) {
      const Complex phase = std::conj(vectors(pivot, j)) / best;
      vectors.col(j) *= phase;
      vectors(pivot, j) = Complex(best, 0.0);
    }
  }
}

} // namespace

AsymmetryEntry max_hermitian_deviation(const ComplexMatrix& h) {
  AsymmetryEntry worst;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = i; j < h.cols(); ++j) {
      const double dev = std::abs(h(i, j) - std::conj(h(j, i)));
      if (dev > worst.deviation) {
        worst = {i, j, dev};
      }
    }
  }
  return worst;
}

HermitianEigenSystem eig_hermitian(const ComplexMatrix& h) {
  require_finite(h, "eig_hermitian");
  if (h.rows() != h.cols()) {
    std::ostringstream msg;
    msg << "eig_hermitian: matrix is " << h.rows() << "x" << h.cols() << ", expected square";
    throw std::invalid_argument(msg.str());
  }
  const AsymmetryEntry worst = max_hermitian_deviation(h);
  if (worst.deviation > kHermitianTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "eig_hermitian: matrix is not Hermitian; max |H - H^dagger| = " << worst.deviation
        << " at (" << worst.row << ", " << worst.col << ")";
    throw std::invalid_argument(msg.str());
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  }
  HermitianEigenSystem out{solver.eigenvalues(), solver.eigenvectors()};
  fix_phases(out.eigenvectors);
  return out;
}

ComplexMatrix propagator(const HermitianEigenSystem& system, double tau) {
  if (!std::isfinite(tau)) {
    throw std::invalid_argument("propagator: non-finite time");
  }
  const auto& q = system.eigenvectors;
  ComplexVector phases(system.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -system.eigenvalues(k) * tau);
  }
  return q * phases.asDiagonal() * q.adjoint();
}

ComplexMatrix propagator(const ComplexMatrix& h, double tau) {
  return propagator(eig_hermitian(h), tau);
}

RealVector singular_values(const ComplexMatrix& c) {
  require_finite(c, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  return svd.singularValues();
}

} // namespace qeet::linalg
