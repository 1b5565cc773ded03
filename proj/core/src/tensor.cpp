#include "tpca/tensor.hpp"

#include <cmath>

namespace tpca {

std::string to_string(const Shape3& shape) {
  return std::to_string(shape.n1) + "x" + std::to_string(shape.n2) + "x" + std::to_string(shape.n3);
}

namespace detail {

void check_extents(const Shape3& shape) {
  if (shape.n1 == 0 || shape.n2 == 0 || shape.n3 == 0) {
    throw Error(Errc::InvalidArgument, "tensor extents must be >= 1, got " + to_string(shape));
  }
}

void check_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, "non-finite tensor entry");
  }
}

void check_finite(std::span<const std::complex<double>> values) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(Errc::InvalidArgument, "non-finite tensor entry");
    }
  }
}

}  // namespace detail

Tensor3 zeros_like(const Tensor3& a) { return Tensor3(a.shape()); }

}  // namespace tpca
