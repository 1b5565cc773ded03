#pragma once

#include <cstddef>

#include "tpca/tensor.hpp"

namespace tpca {

/// Largest imaginary residue ifft3 tolerates, relative to 1 + |entry|.
inline constexpr double kImagResidueTol = 1e-9;

/// Unnormalized DFT of every tube A(i,j,:).
SpectralTensor3 fft3(const Tensor3& a);

/// Inverse of fft3 (1/n3 scaled). Throws SymmetryViolation when the input is
/// not the transform of a real tensor, i.e. some imaginary residue exceeds
/// kImagResidueTol * (1 + |entry|).
Tensor3 ifft3(const SpectralTensor3& a);

/// Fourier slices 0..independent_slices(n3)-1 determine the rest: slice k and
/// slice mirror_slice(k) are complex conjugates for a real source tensor.
constexpr std::size_t independent_slices(std::size_t n3) noexcept { return n3 / 2 + 1; }
constexpr std::size_t mirror_slice(std::size_t k, std::size_t n3) noexcept {
  return (n3 - k) % n3;
}
constexpr bool is_self_conjugate(std::size_t k, std::size_t n3) noexcept {
  return mirror_slice(k, n3) == k;
}

}  // namespace tpca
