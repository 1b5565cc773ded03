#pragma once

#include <cstddef>
#include <vector>

#include "tpca/tensor.hpp"

namespace tpca {

/// Rank cut-off relative to the largest Fourier-domain singular value.
inline constexpr double kDefaultRankTol = 1e-10;

/// a = u * s * v^T with orthogonal u (n1 x n1 x n3), v (n2 x n2 x n3) and
/// f-diagonal s (n1 x n2 x n3).
struct TSVDFactors {
  Tensor3 u;
  Tensor3 s;
  Tensor3 v;
};

/// Ranks of the Fourier-domain frontal slices.
struct MultiRank {
  std::vector<std::size_t> r;

  std::size_t tubal() const noexcept;
};

/// Per-slice complex SVD of fft3(a), transformed back slice-stack by
/// slice-stack. Singular values inside each Fourier slice are nonincreasing.
/// Throws NumericalFailure if a slice SVD does not converge.
TSVDFactors tsvd(const Tensor3& a);

/// Singular values of every Fourier frontal slice of a, nonincreasing per
/// slice; entry k has min(n1, n2) values.
std::vector<std::vector<double>> fourier_singular_values(const Tensor3& a);

/// Counts singular values above rel_tol times the largest singular value over
/// all slices. A zero tensor has multi-rank zero.
MultiRank multi_rank(const Tensor3& a, double rel_tol = kDefaultRankTol);

/// max_i r_i of multi_rank(a, rel_tol).
std::size_t tubal_rank(const Tensor3& a, double rel_tol = kDefaultRankTol);

/// Number of singular tubes s(i,i,:) whose norm exceeds rel_tol times the
/// largest singular-tube norm; agrees with tubal_rank on the source tensor.
std::size_t count_singular_tubes(const Tensor3& s, double rel_tol = kDefaultRankTol);

/// Tensor nuclear norm: sum of all singular values of all Fourier slices.
double tnn(const Tensor3& a);

/// Singular value thresholding in the Fourier domain: each slice
/// U diag(sigma) V^H becomes U diag(max(sigma - tau, 0)) V^H.
Tensor3 svt(const Tensor3& a, double tau);

}  // namespace tpca
