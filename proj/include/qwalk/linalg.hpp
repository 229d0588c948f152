// Copyright 2026 The qwalk Authors
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

// Dense complex linear algebra for walk Hamiltonians: Fourier/Vandermonde
// matrices, circulant diagonalization, Kronecker products and unitary
// evolution from a spectral decomposition.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/error.hpp"

namespace qwalk {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-10;

/// Dense complex matrix that remembers whether it was validated as Hermitian.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}

  /// Wraps `entries` and checks M = M^dagger entrywise within 1e-12.
  static ComplexMatrix hermitian(Eigen::MatrixXcd entries) {
    detail::require(entries.rows() == entries.cols(), ErrorKind::contract_violation,
                    "hermitian matrix must be square");
    const Eigen::Index n = entries.rows();
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = r; c < n; ++c) {
        detail::require(std::abs(entries(r, c) - std::conj(entries(c, r))) <= kHermitianTolerance,
                        ErrorKind::contract_violation, "matrix is not hermitian");
      }
    }
    ComplexMatrix m(std::move(entries));
    m.hermitian_ = true;
    return m;
  }

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  bool is_hermitian() const { return hermitian_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

 private:
  Eigen::MatrixXcd entries_;
  bool hermitian_ = false;
};

/// Eigenpairs of a Hermitian matrix. Eigenvalues ascend; column j of
/// `eigenvectors` belongs to eigenvalue j and the columns are orthonormal.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }

  /// alpha_j = <z_j|psi0>.
  ComplexVector overlaps(const ComplexVector& psi0) const {
    detail::require(psi0.size() == size(), ErrorKind::dimension_mismatch,
                    "state length " + std::to_string(psi0.size()) + " != dimension " +
                        std::to_string(size()));
    return eigenvectors.adjoint() * psi0;
  }

  Eigen::MatrixXcd reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

namespace detail {

inline Complex root_of_unity_power(std::size_t n, std::size_t exponent) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent % n) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

// Stable ascending order, ties keep their original index order.
inline SpectralDecomposition sorted(RealVector values, Eigen::MatrixXcd vectors) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });
  SpectralDecomposition out;
  out.eigenvalues.resize(values.size());
  out.eigenvectors.resize(vectors.rows(), vectors.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto dst = static_cast<Eigen::Index>(k);
    out.eigenvalues(dst) = values(order[k]);
    out.eigenvectors.col(dst) = vectors.col(order[k]);
  }
  return out;
}

inline void require_state(const ComplexVector& psi) {
  require(std::abs(psi.squaredNorm() - 1.0) <= kNormTolerance, ErrorKind::contract_violation,
          "state is not normalized");
}

}  // namespace detail

/// Unitary Fourier matrix F with F(j,k) = omega^{jk} / sqrt(n), omega = e^{2 pi i / n}.
inline ComplexMatrix dft_matrix(std::size_t n) {
  detail::require(n >= 1, ErrorKind::invalid_dimension, "dft_matrix needs n >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd f(dim, dim);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          scale * detail::root_of_unity_power(n, j * k);
    }
  }
  return ComplexMatrix(std::move(f));
}

/// Returns V(omega) f, where f is the first column of a circulant C.
///
/// Entry j is the eigenvalue of C for the eigenvector given by column j of
/// F^dagger (F C F^dagger is diagonal). For symmetric circulants column j of F
/// shares the same eigenvalue.
inline ComplexVector circulant_eigenvalues(const ComplexVector& first_column) {
  const auto n = static_cast<std::size_t>(first_column.size());
  detail::require(n >= 1, ErrorKind::invalid_dimension, "circulant needs length >= 1");
  ComplexVector out = ComplexVector::Zero(first_column.size());
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += detail::root_of_unity_power(n, j * k) * first_column(static_cast<Eigen::Index>(k));
    }
    out(static_cast<Eigen::Index>(j)) = acc;
  }
  return out;
}

/// Assembles the circulant whose k-th row is the 0-th row rotated right k times.
inline ComplexMatrix circulant_matrix(const ComplexVector& first_column) {
  const Eigen::Index n = first_column.size();
  detail::require(n >= 1, ErrorKind::invalid_dimension, "circulant needs length >= 1");
  Eigen::MatrixXcd c(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) c(r, s) = first_column(((r - s) % n + n) % n);
  }
  return ComplexMatrix(std::move(c));
}

/// Diagonalizes a Hermitian circulant through the Fourier basis.
inline SpectralDecomposition circulant_decomposition(const ComplexVector& first_column) {
  const ComplexVector values = circulant_eigenvalues(first_column);
  RealVector real_values(values.size());
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    detail::require(std::abs(values(j).imag()) < 1e-10, ErrorKind::contract_violation,
                    "circulant is not hermitian: eigenvalue has imaginary part");
    real_values(j) = values(j).real();
  }
  return detail::sorted(std::move(real_values), dft_matrix(static_cast<std::size_t>(values.size()))
                                                     .entries()
                                                     .adjoint());
}

inline ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require(a.rows() > 0 && a.cols() > 0 && b.rows() > 0 && b.cols() > 0,
                  ErrorKind::invalid_dimension, "kronecker operands must be nonempty");
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  Eigen::MatrixXcd out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b.entries();
    }
  }
  ComplexMatrix result(std::move(out));
  if (a.is_hermitian() && b.is_hermitian()) return ComplexMatrix::hermitian(result.entries());
  return result;
}

/// Dense fallback eigensolver for Hermitian matrices.
inline SpectralDecomposition hermitian_eigendecomposition(const ComplexMatrix& h) {
  detail::require(h.is_hermitian(), ErrorKind::contract_violation,
                  "hermitian_eigendecomposition requires a hermitian matrix");
  detail::require(h.rows() >= 1, ErrorKind::invalid_dimension, "empty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries());
  detail::require(solver.info() == Eigen::Success, ErrorKind::tolerance_unmet,
                  "eigensolver did not converge");
  return detail::sorted(solver.eigenvalues(), solver.eigenvectors());
}

/// Precomputed evolution psi_t = sum_j alpha_j e^{-i lambda_j t} |z_j> for a
/// fixed initial state. Read-only after construction; `state` may be called
/// concurrently.
class Propagator {
 public:
  Propagator(SpectralDecomposition decomposition, const ComplexVector& psi0)
      : decomposition_(std::move(decomposition)) {
    detail::require(psi0.size() == decomposition_.size(), ErrorKind::dimension_mismatch,
                    "initial state does not match decomposition dimension");
    detail::require_state(psi0);
    overlaps_ = decomposition_.overlaps(psi0);
  }

  ComplexVector state(double t) const {
    ComplexVector weights(overlaps_.size());
    for (Eigen::Index j = 0; j < overlaps_.size(); ++j) {
      weights(j) = overlaps_(j) * std::polar(1.0, -decomposition_.eigenvalues(j) * t);
    }
    return decomposition_.eigenvectors * weights;
  }

  RealVector probabilities(double t) const { return state(t).cwiseAbs2(); }

  const SpectralDecomposition& decomposition() const { return decomposition_; }
  const ComplexVector& overlaps() const { return overlaps_; }
  Eigen::Index dimension() const { return decomposition_.size(); }

 private:
  SpectralDecomposition decomposition_;
  ComplexVector overlaps_;
};

inline ComplexVector evolve_spectral(const SpectralDecomposition& decomposition, double t,
                                     const ComplexVector& psi0) {
  return Propagator(decomposition, psi0).state(t);
}

inline ComplexVector basis_state(Eigen::Index n, Eigen::Index index) {
  ComplexVector v = ComplexVector::Zero(n);
  v(index) = 1.0;
  return v;
}

}  // namespace qwalk
