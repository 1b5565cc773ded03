#include "tpca/tproduct.hpp"

#include <string>

#include "spectral.hpp"
#include "tpca/fourier.hpp"
#include "tpca/norms.hpp"

namespace tpca {
namespace {

void check_product_shapes(const Tensor3& a, const Tensor3& b) {
  if (a.n2() != b.n1() || a.n3() != b.n3()) {
    throw Error(Errc::ShapeMismatch,
                "t-product of " + to_string(a.shape()) + " and " + to_string(b.shape()));
  }
}

}  // namespace

Tensor3 tproduct(const Tensor3& a, const Tensor3& b) {
  check_product_shapes(a, b);
  const SpectralTensor3 fa = fft3(a);
  const SpectralTensor3 fb = fft3(b);
  SpectralTensor3 fc(Shape3{a.n1(), b.n2(), a.n3()});
  for (std::size_t k = 0; k < independent_slices(a.n3()); ++k) {
    detail::slice_map(fc, k).noalias() = detail::slice_map(fa, k) * detail::slice_map(fb, k);
  }
  detail::mirror_dependent_slices(fc);
  return ifft3(fc);
}

Tensor3 tproduct_naive(const Tensor3& a, const Tensor3& b) {
  check_product_shapes(a, b);
  const std::size_t n3 = a.n3();
  Tensor3 c(Shape3{a.n1(), b.n2(), n3});
  for (std::size_t j = 0; j < b.n2(); ++j) {
    for (std::size_t i = 0; i < a.n1(); ++i) {
      for (std::size_t p = 0; p < a.n2(); ++p) {
        // c(i,j,:) += a(i,p,:) circularly convolved with b(p,j,:)
        for (std::size_t k = 0; k < n3; ++k) {
          double acc = 0.0;
          for (std::size_t m = 0; m < n3; ++m) {
            acc += a(i, p, m) * b(p, j, (k + n3 - m) % n3);
          }
          c(i, j, k) += acc;
        }
      }
    }
  }
  return c;
}

Tensor3 conj_transpose(const Tensor3& a) {
  const std::size_t n3 = a.n3();
  Tensor3 out(Shape3{a.n2(), a.n1(), n3});
  for (std::size_t k = 0; k < n3; ++k) {
    const std::size_t src = (n3 - k) % n3;
    for (std::size_t j = 0; j < a.n2(); ++j) {
      for (std::size_t i = 0; i < a.n1(); ++i) out(j, i, k) = a(i, j, src);
    }
  }
  return out;
}

Tensor3 identity_tensor(std::size_t n, std::size_t n3) {
  Tensor3 out(Shape3{n, n, n3});
  for (std::size_t i = 0; i < n; ++i) out(i, i, 0) = 1.0;
  return out;
}

bool is_orthogonal(const Tensor3& q, double tol) {
  if (q.n1() != q.n2()) {
    throw Error(Errc::ShapeMismatch, "orthogonality needs square slices, got " + to_string(q.shape()));
  }
  const Tensor3 eye = identity_tensor(q.n1(), q.n3());
  const Tensor3 qt = conj_transpose(q);
  return norm(tproduct(qt, q) - eye, NormKind::Fro) <= tol &&
         norm(tproduct(q, qt) - eye, NormKind::Fro) <= tol;
}

bool is_fdiagonal(const Tensor3& s, double tol) {
  for (std::size_t k = 0; k < s.n3(); ++k) {
    for (std::size_t j = 0; j < s.n2(); ++j) {
      for (std::size_t i = 0; i < s.n1(); ++i) {
        if (i != j && std::abs(s(i, j, k)) > tol) return false;
      }
    }
  }
  return true;
}

Tensor3 standard_basis(std::size_t i, std::size_t n, std::size_t n3) {
  if (i >= n) {
    throw Error(Errc::IndexOutOfRange,
                "basis index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
  }
  Tensor3 out(Shape3{n, 1, n3});
  out(i, 0, 0) = 1.0;
  return out;
}

}  // namespace tpca
