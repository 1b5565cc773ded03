#pragma once

// Test-only reference computations. None of these go through the library's
// FFT or slice-SVD code paths: the DFT is evaluated by its defining sum and
// singular values come from a Hermitian eigensolver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "tpca/tensor.hpp"

namespace tpca::testing {

using Cx = std::complex<double>;
using CxMatrix = Eigen::Matrix<Cx, Eigen::Dynamic, Eigen::Dynamic>;

inline Tensor3 random_tensor(std::size_t n1, std::size_t n2, std::size_t n3, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Tensor3 t(Shape3{n1, n2, n3});
  for (auto& v : t.data()) v = gauss(rng);
  return t;
}

inline std::size_t random_dim(std::mt19937_64& rng, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(1, hi)(rng);
}

/// Direct O(n3^2) DFT of every tube.
inline std::vector<CxMatrix> dft_slices(const Tensor3& a) {
  const std::size_t n3 = a.n3();
  std::vector<CxMatrix> out(n3, CxMatrix::Zero(static_cast<Eigen::Index>(a.n1()), static_cast<Eigen::Index>(a.n2())));
  for (std::size_t f = 0; f < n3; ++f) {
    for (std::size_t k = 0; k < n3; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(f * k % n3) / static_cast<double>(n3);
      const Cx w(std::cos(angle), std::sin(angle));
      for (std::size_t j = 0; j < a.n2(); ++j) {
        for (std::size_t i = 0; i < a.n1(); ++i) out[f](i, j) += w * a(i, j, k);
      }
    }
  }
  return out;
}

/// Singular values of m, nonincreasing, as the nonnegative eigenvalues of the
/// Hermitian matrix [0 m; m^H 0].
inline Eigen::VectorXd singular_values(const CxMatrix& m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  CxMatrix aug = CxMatrix::Zero(r + c, r + c);
  aug.topRightCorner(r, c) = m;
  aug.bottomLeftCorner(c, r) = m.adjoint();
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<CxMatrix>(aug, Eigen::EigenvaluesOnly).eigenvalues();
  Eigen::VectorXd out = ev.tail(std::min(r, c)).reverse();
  return out.cwiseMax(0.0);
}

/// Nuclear norm of the block-diagonal matrix assembled from all Fourier
/// slices, factored as one big matrix.
inline double blkdiag_nuclear_norm(const Tensor3& a) {
  const auto slices = dft_slices(a);
  const auto r = static_cast<Eigen::Index>(a.n1());
  const auto c = static_cast<Eigen::Index>(a.n2());
  const auto n3 = static_cast<Eigen::Index>(a.n3());
  CxMatrix big = CxMatrix::Zero(r * n3, c * n3);
  for (Eigen::Index k = 0; k < n3; ++k) big.block(k * r, k * c, r, c) = slices[static_cast<std::size_t>(k)];
  return singular_values(big).sum();
}

inline double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  double peak = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) peak = std::max(peak, std::abs(a.data()[n] - b.data()[n]));
  return peak;
}

}  // namespace tpca::testing
