#pragma once

#include <cstddef>

#include "tpca/tensor.hpp"

namespace tpca {

/// t-product of an n1 x n2 x n3 and an n2 x n4 x n3 tensor: tube-wise
/// circular convolution, evaluated as slice-wise matrix products in the
/// Fourier domain. Throws ShapeMismatch.
Tensor3 tproduct(const Tensor3& a, const Tensor3& b);

/// Same product by direct circular convolution of tubes, O(n1 n2 n4 n3^2).
/// Kept as an FFT-free reference.
Tensor3 tproduct_naive(const Tensor3& a, const Tensor3& b);

/// Transpose every frontal slice, then reverse the order of slices 2..n3.
Tensor3 conj_transpose(const Tensor3& a);

/// n x n x n3 tensor whose first frontal slice is I_n and the rest zero.
Tensor3 identity_tensor(std::size_t n, std::size_t n3);

/// True iff q^T * q and q * q^T are both within tol (Frobenius) of the
/// identity. Throws ShapeMismatch unless q is n x n x n3.
bool is_orthogonal(const Tensor3& q, double tol);

/// True iff every off-diagonal entry of every frontal slice is <= tol.
bool is_fdiagonal(const Tensor3& s, double tol);

/// Column basis of size n x 1 x n3 with a single 1 at (i, 0, 0).
/// Index i is zero-based. Throws IndexOutOfRange unless i < n.
Tensor3 standard_basis(std::size_t i, std::size_t n, std::size_t n3);

}  // namespace tpca
