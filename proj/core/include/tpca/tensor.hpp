#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpca/error.hpp"

namespace tpca {

/// Extents of a third-order tensor: n1 rows, n2 columns, n3 tube length.
struct Shape3 {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t n3 = 0;

  constexpr std::size_t size() const noexcept { return n1 * n2 * n3; }
  constexpr std::size_t slice_size() const noexcept { return n1 * n2; }

  friend constexpr bool operator==(const Shape3&, const Shape3&) = default;
};

std::string to_string(const Shape3& shape);

namespace detail {
void check_extents(const Shape3& shape);
void check_finite(std::span<const double> values);
void check_finite(std::span<const std::complex<double>> values);
}  // namespace detail

/// Dense third-order tensor with index i varying fastest, then j, then k.
///
/// Each frontal slice A(:,:,k) is therefore a contiguous column-major
/// n1 x n2 matrix, and the tube A(i,j,:) is strided by n1*n2.
template <typename T>
class DenseTensor3 {
 public:
  using value_type = T;

  DenseTensor3() : DenseTensor3(1, 1, 1) {}

  DenseTensor3(std::size_t n1, std::size_t n2, std::size_t n3)
      : DenseTensor3(Shape3{n1, n2, n3}) {}

  explicit DenseTensor3(const Shape3& shape) : shape_(shape) {
    detail::check_extents(shape_);
    data_.assign(shape_.size(), T{});
  }

  /// Adopts external data; validates length and rejects NaN/Inf.
  DenseTensor3(const Shape3& shape, std::vector<T> data) : shape_(shape), data_(std::move(data)) {
    detail::check_extents(shape_);
    if (data_.size() != shape_.size()) {
      throw Error(Errc::ShapeMismatch, "data length " + std::to_string(data_.size()) +
                                           " does not match " + to_string(shape_));
    }
    detail::check_finite(std::span<const T>(data_));
  }

  static DenseTensor3 zeros(const Shape3& shape) { return DenseTensor3(shape); }

  const Shape3& shape() const noexcept { return shape_; }
  std::size_t n1() const noexcept { return shape_.n1; }
  std::size_t n2() const noexcept { return shape_.n2; }
  std::size_t n3() const noexcept { return shape_.n3; }
  std::size_t size() const noexcept { return data_.size(); }

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return i + shape_.n1 * (j + shape_.n2 * k);
  }

  T& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
    return data_[index(i, j, k)];
  }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return data_[index(i, j, k)];
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  /// Frontal slice k as a contiguous column-major n1 x n2 block.
  std::span<T> slice(std::size_t k) noexcept {
    return std::span<T>(data_).subspan(k * shape_.slice_size(), shape_.slice_size());
  }
  std::span<const T> slice(std::size_t k) const noexcept {
    return std::span<const T>(data_).subspan(k * shape_.slice_size(), shape_.slice_size());
  }

  std::vector<T> tube(std::size_t i, std::size_t j) const {
    std::vector<T> out(shape_.n3);
    for (std::size_t k = 0; k < shape_.n3; ++k) out[k] = (*this)(i, j, k);
    return out;
  }

  void set_tube(std::size_t i, std::size_t j, std::span<const T> values) {
    if (values.size() != shape_.n3) {
      throw Error(Errc::ShapeMismatch, "tube length " + std::to_string(values.size()) +
                                           " != n3 = " + std::to_string(shape_.n3));
    }
    for (std::size_t k = 0; k < shape_.n3; ++k) (*this)(i, j, k) = values[k];
  }

  DenseTensor3& operator+=(const DenseTensor3& other) {
    require_same_shape(other, "+=");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += other.data_[n];
    return *this;
  }
  DenseTensor3& operator-=(const DenseTensor3& other) {
    require_same_shape(other, "-=");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] -= other.data_[n];
    return *this;
  }
  DenseTensor3& operator*=(const T& scale) {
    for (auto& v : data_) v *= scale;
    return *this;
  }

  friend DenseTensor3 operator+(DenseTensor3 lhs, const DenseTensor3& rhs) { return lhs += rhs; }
  friend DenseTensor3 operator-(DenseTensor3 lhs, const DenseTensor3& rhs) { return lhs -= rhs; }
  friend DenseTensor3 operator*(DenseTensor3 lhs, const T& scale) { return lhs *= scale; }
  friend DenseTensor3 operator*(const T& scale, DenseTensor3 rhs) { return rhs *= scale; }

  /// Exact (bitwise for finite values) equality of shape and entries.
  friend bool operator==(const DenseTensor3& a, const DenseTensor3& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const DenseTensor3& other, const char* op) const {
    if (other.shape_ != shape_) {
      throw Error(Errc::ShapeMismatch,
                  std::string(op) + ": " + to_string(shape_) + " vs " + to_string(other.shape_));
    }
  }

  Shape3 shape_;
  std::vector<T> data_;
};

using Tensor3 = DenseTensor3<double>;
using SpectralTensor3 = DenseTensor3<std::complex<double>>;
using Tube = std::vector<double>;

Tensor3 zeros_like(const Tensor3& a);

}  // namespace tpca
