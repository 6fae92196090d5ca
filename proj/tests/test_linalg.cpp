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

#include "doctest.h"
#include "oracles.hpp"

#include "linalg.hpp"

#include <numbers>
#include <limits>
#include <stdexcept>

using namespace qeet::linalg;

TEST_CASE("eig_hermitian: diagonal input") {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(0, 0) = 1.0;
  h(1, 1) = 2.0;
  h(2, 2) = 3.0;
  const auto sys = eig_hermitian(h);
  CHECK(sys.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(sys.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(sys.eigenvalues(2) == doctest::Approx(3.0));
  CHECK(oracle::max_abs(sys.eigenvectors - ComplexMatrix::Identity(3, 3)) < 1e-14);
}

TEST_CASE("eig_hermitian: Pauli X") {
  ComplexMatrix h(2, 2);
  h << 0.0, 1.0, 1.0, 0.0;
  const auto sys = eig_hermitian(h);
  CHECK(sys.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(sys.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian: exciton block against closed form") {
  ComplexMatrix h(2, 2);
  h << 16050.0, -87.0, -87.0, 15808.0;
  const auto [lo, hi] = oracle::eig2(16050.0, 15808.0, -87.0);
  const auto sys = eig_hermitian(h);
  CHECK(std::abs(sys.eigenvalues(0) - lo) < 1e-9);
  CHECK(std::abs(sys.eigenvalues(1) - hi) < 1e-9);
  CHECK(std::abs(sys.eigenvalues(0) - 15779.9698) < 1e-3);
  CHECK(std::abs(sys.eigenvalues(1) - 16078.0302) < 1e-3);
}

TEST_CASE("eig_hermitian: reconstruction and phase convention on random input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = oracle::random_hermitian(rng, 6);
    const auto sys = eig_hermitian(h);
    const ComplexMatrix back =
        sys.eigenvectors * sys.eigenvalues.cast<Complex>().asDiagonal() * sys.eigenvectors.adjoint();
    CHECK(oracle::max_abs(back - h) < 1e-10);
    const auto ref = oracle::jacobi_eigenvalues(h);
    for (int i = 0; i < 6; ++i) {
      CHECK(std::abs(sys.eigenvalues(i) - ref[static_cast<std::size_t>(i)]) < 1e-9);
    }
    for (int k = 0; k < 6; ++k) {
      Eigen::Index arg = 0;
      sys.eigenvectors.col(k).cwiseAbs().maxCoeff(&arg);
      CHECK(std::abs(sys.eigenvectors(arg, k).imag()) < 1e-14);
      CHECK(sys.eigenvectors(arg, k).real() > 0.0);
    }
  }
}

TEST_CASE("eig_hermitian: rejects invalid input") {
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
  nan(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eig_hermitian(nan), std::invalid_argument);
  ComplexMatrix skew(2, 2);
  skew << 0.0, 1.0, 0.5, 0.0;
  try {
    eig_hermitian(skew);
    FAIL("accepted a non-Hermitian matrix");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("0.5") != std::string::npos);
    CHECK(msg.find("(0, 1)") != std::string::npos);
  }
  const auto dev = max_hermitian_deviation(skew);
  CHECK(dev.deviation == doctest::Approx(0.5));
}

TEST_CASE("propagator: tau = 0 is the identity") {
  std::mt19937_64 rng(3);
  const auto h = oracle::random_hermitian(rng, 5);
  CHECK(oracle::max_abs(propagator(h, 0.0) - ComplexMatrix::Identity(5, 5)) < 1e-15);
}

TEST_CASE("propagator: Rabi rotation at pi/2") {
  ComplexMatrix h(2, 2);
  h << 0.0, 1.0, 1.0, 0.0;
  const ComplexMatrix u = propagator(h, std::numbers::pi / 2.0);
  const ComplexMatrix expected = Complex(0.0, -1.0) * h;
  CHECK(oracle::max_abs(u - expected) < 1e-14);
}

TEST_CASE("propagator: Taylor oracle and unitarity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_hermitian(rng, 4);
    const ComplexMatrix u = propagator(h, 0.1);
    CHECK(oracle::max_abs(u - oracle::taylor_propagator(h, 0.1)) < 1e-9);
    CHECK(oracle::max_abs(u.adjoint() * u - ComplexMatrix::Identity(4, 4)) < 1e-12);
  }
  const auto h = oracle::random_hermitian(rng, 16, 3.0);
  const auto sys = eig_hermitian(h);
  CHECK(oracle::max_abs(propagator(sys, 2.5) - oracle::taylor_propagator(h, 2.5)) < 1e-9);
}

TEST_CASE("singular_values") {
  const auto id = singular_values(ComplexMatrix::Identity(4, 4));
  for (int i = 0; i < 4; ++i) {
    CHECK(id(i) == doctest::Approx(1.0));
  }
  ComplexMatrix rank1 = ComplexMatrix::Zero(4, 4);
  rank1(2, 1) = 0.5;
  const auto s = singular_values(rank1);
  CHECK(s(0) == doctest::Approx(0.5));
  CHECK(s.tail(3).cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_matrix(rng, 4);
    const auto sv = singular_values(c);
    for (int i = 1; i < 4; ++i) {
      CHECK(sv(i) <= sv(i - 1));
    }
    const auto gram = eig_hermitian(c * c.adjoint()).eigenvalues; // ascending
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(sv(i) * sv(i) - gram(3 - i)) < 1e-10 * std::max(1.0, gram(3)));
    }
  }
}

TEST_CASE("propagator composes and preserves norms") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_hermitian(rng, trial % 2 == 0 ? 4 : 16);
    const double t1 = uni(rng);
    const double t2 = uni(rng);
    CHECK(oracle::max_abs(propagator(h, t1) * propagator(h, t2) - propagator(h, t1 + t2)) < 1e-9);
    const ComplexVector v = oracle::random_state(rng, static_cast<int>(h.rows())) * 3.7;
    CHECK(std::abs((propagator(h, t1) * v).norm() - v.norm()) < 1e-10);
  }
}

TEST_CASE("singular values are unitarily invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = oracle::random_matrix(rng, 4);
    const ComplexMatrix u = propagator(oracle::random_hermitian(rng, 4), 1.0);
    const ComplexMatrix w = propagator(oracle::random_hermitian(rng, 4), 1.0);
    CHECK((singular_values(u * c * w) - singular_values(c)).cwiseAbs().maxCoeff() < 1e-10);
  }
}
