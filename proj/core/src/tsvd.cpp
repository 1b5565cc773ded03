#include "tpca/tsvd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral.hpp"
#include "tpca/fourier.hpp"

namespace tpca {

using detail::ComplexMatrix;
using detail::slice_map;
using detail::slice_svd;
using detail::SvdVectors;

std::size_t MultiRank::tubal() const noexcept {
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

TSVDFactors tsvd(const Tensor3& a) {
  const std::size_t n1 = a.n1(), n2 = a.n2(), n3 = a.n3();
  const SpectralTensor3 fa = fft3(a);
  SpectralTensor3 fu(Shape3{n1, n1, n3});
  SpectralTensor3 fs(Shape3{n1, n2, n3});
  SpectralTensor3 fv(Shape3{n2, n2, n3});

  for (std::size_t k = 0; k < independent_slices(n3); ++k) {
    const auto svd = slice_svd(slice_map(fa, k), is_self_conjugate(k, n3), SvdVectors::Full);
    slice_map(fu, k) = svd.u;
    slice_map(fv, k) = svd.v;
    auto s = slice_map(fs, k);
    for (Eigen::Index d = 0; d < svd.sigma.size(); ++d) s(d, d) = svd.sigma(d);
  }
  detail::mirror_dependent_slices(fu);
  detail::mirror_dependent_slices(fs);
  detail::mirror_dependent_slices(fv);
  return {ifft3(fu), ifft3(fs), ifft3(fv)};
}

std::vector<std::vector<double>> fourier_singular_values(const Tensor3& a) {
  const std::size_t n3 = a.n3();
  const SpectralTensor3 fa = fft3(a);
  std::vector<std::vector<double>> out(n3);
  for (std::size_t k = 0; k < independent_slices(n3); ++k) {
    const auto svd = slice_svd(slice_map(fa, k), is_self_conjugate(k, n3), SvdVectors::None);
    out[k].assign(svd.sigma.data(), svd.sigma.data() + svd.sigma.size());
  }
  for (std::size_t k = independent_slices(n3); k < n3; ++k) out[k] = out[mirror_slice(k, n3)];
  return out;
}

MultiRank multi_rank(const Tensor3& a, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw Error(Errc::InvalidArgument, "rank tolerance must lie in (0, 1)");
  }
  const auto sigma = fourier_singular_values(a);
  double largest = 0.0;
  for (const auto& slice : sigma) {
    if (!slice.empty()) largest = std::max(largest, slice.front());
  }
  MultiRank out;
  out.r.reserve(sigma.size());
  for (const auto& slice : sigma) {
    std::size_t count = 0;
    if (largest > 0.0) {
      count = static_cast<std::size_t>(std::count_if(
          slice.begin(), slice.end(), [&](double s) { return s > rel_tol * largest; }));
    }
    out.r.push_back(count);
  }
  return out;
}

std::size_t tubal_rank(const Tensor3& a, double rel_tol) { return multi_rank(a, rel_tol).tubal(); }

std::size_t count_singular_tubes(const Tensor3& s, double rel_tol) {
  const std::size_t diag = std::min(s.n1(), s.n2());
  std::vector<double> norms(diag, 0.0);
  for (std::size_t i = 0; i < diag; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < s.n3(); ++k) sum += s(i, i, k) * s(i, i, k);
    norms[i] = std::sqrt(sum);
  }
  const double largest = norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
  if (largest == 0.0) return 0;
  return static_cast<std::size_t>(
      std::count_if(norms.begin(), norms.end(), [&](double v) { return v > rel_tol * largest; }));
}

double tnn(const Tensor3& a) {
  double total = 0.0;
  for (const auto& slice : fourier_singular_values(a)) {
    for (double s : slice) total += s;
  }
  return total;
}

Tensor3 svt(const Tensor3& a, double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw Error(Errc::InvalidArgument, "threshold must be finite and >= 0, got " + std::to_string(tau));
  }
  const std::size_t n3 = a.n3();
  SpectralTensor3 fa = fft3(a);
  for (std::size_t k = 0; k < independent_slices(n3); ++k) {
    auto slice = slice_map(fa, k);
    auto svd = slice_svd(slice, is_self_conjugate(k, n3), SvdVectors::Thin);
    const Eigen::VectorXd shrunk = (svd.sigma.array() - tau).max(0.0).matrix();
    slice.noalias() = svd.u * shrunk.cast<std::complex<double>>().asDiagonal() * svd.v.adjoint();
  }
  detail::mirror_dependent_slices(fa);
  return ifft3(fa);
}

}  // namespace tpca
