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

// Reference implementations that share no code path with the library:
// plain loops, Taylor series and explicit partial traces.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// exp(-i h tau) by scaling and squaring a truncated Taylor series.
inline Matrix taylor_propagator(const Matrix& h, double tau) {
  const Matrix a = Complex(0.0, -tau) * h;
  double norm = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      row += std::abs(a(i, j));
    }
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix scaled = a / std::pow(2.0, squarings);
  const auto n = a.rows();
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

/// rho_A = Tr_B |psi><psi| with explicit index sums, basis index m * db + n.
inline Matrix partial_trace_b(const Vector& psi, int da, int db) {
  Matrix rho = Matrix::Zero(da, da);
  for (int m = 0; m < da; ++m) {
    for (int mp = 0; mp < da; ++mp) {
      Complex acc = 0.0;
      for (int n = 0; n < db; ++n) {
        acc += psi(m * db + n) * std::conj(psi(mp * db + n));
      }
      rho(m, mp) = acc;
    }
  }
  return rho;
}

/// Eigenvalues of a Hermitian matrix via the characteristic roots found by
/// Jacobi rotations on the real symmetric 2n embedding. Returned ascending,
/// each value once (the embedding doubles the spectrum).
inline std::vector<double> jacobi_eigenvalues(const Matrix& h) {
  const auto n = h.rows();
  Eigen::MatrixXd a(2 * n, 2 * n);
  a << h.real(), -h.imag(), h.imag(), h.real();
  const auto m = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        off += a(p, q) * a(p, q);
      }
    }
    if (off < 1e-30) {
      break;
    }
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        if (std::abs(a(p, q)) < 1e-300) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < m; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> all(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    all[static_cast<std::size_t>(i)] = a(i, i);
  }
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < all.size(); i += 2) {
    out.push_back(0.5 * (all[i] + all[i + 1]));
  }
  return out;
}

/// Lower and upper eigenvalue of [[e1, v], [v, e2]].
inline std::pair<double, double> eig2(double e1, double e2, double v) {
  const double mean = 0.5 * (e1 + e2);
  const double half = 0.5 * (e1 - e2);
  const double root = std::sqrt(half * half + v * v);
  return {mean - root, mean + root};
}

inline double binary_entropy(double p) {
  double e = 0.0;
  for (double x : {p, 1.0 - p}) {
    if (x > 0.0) {
      e -= x * std::log2(x);
    }
  }
  return e;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
    }
  }
  return 0.5 * (m + m.adjoint());
}

inline Vector random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = Complex(g(rng), g(rng));
  }
  return v / v.norm();
}

inline Matrix random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
    }
  }
  return m;
}

inline double max_abs(const Matrix& m) {
  return m.cwiseAbs().maxCoeff();
}

} // namespace oracle
