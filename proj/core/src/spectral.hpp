#pragma once

// Eigen views over Fourier-domain slices and the per-slice SVD shared by the
// t-product, t-SVD and thresholding code. Private to the core library.

#include <complex>
#include <cstddef>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "tpca/fourier.hpp"
#include "tpca/tensor.hpp"

namespace tpca::detail {

using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline Eigen::Map<ComplexMatrix> slice_map(SpectralTensor3& t, std::size_t k) {
  return {t.slice(k).data(), static_cast<Eigen::Index>(t.n1()), static_cast<Eigen::Index>(t.n2())};
}

inline Eigen::Map<const ComplexMatrix> slice_map(const SpectralTensor3& t, std::size_t k) {
  return {t.slice(k).data(), static_cast<Eigen::Index>(t.n1()), static_cast<Eigen::Index>(t.n2())};
}

/// Overwrites every dependent Fourier slice with the conjugate of its mirror.
inline void mirror_dependent_slices(SpectralTensor3& t) {
  const std::size_t n3 = t.n3();
  for (std::size_t k = 1; k < independent_slices(n3); ++k) {
    const std::size_t m = mirror_slice(k, n3);
    if (m != k) slice_map(t, m) = slice_map(t, k).conjugate();
  }
}

struct SliceSvd {
  ComplexMatrix u;
  RealVector sigma;  // nonincreasing, nonnegative
  ComplexMatrix v;
};

enum class SvdVectors { None, Thin, Full };

/// SVD of one Fourier slice. Self-conjugate slices (k = 0 and k = n3/2) are
/// real for real tensors and are factored in real arithmetic so that the
/// factors stay real as well. Throws NumericalFailure on non-convergence.
SliceSvd slice_svd(const Eigen::Ref<const ComplexMatrix>& slice, bool real_slice, SvdVectors vectors);

}  // namespace tpca::detail
