#include "tpca/fourier.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace tpca {
namespace {

// Eigen::FFT caches twiddles per instance and is not safe to share.
Eigen::FFT<double>& thread_fft() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

SpectralTensor3 fft3(const Tensor3& a) {
  const auto& shape = a.shape();
  SpectralTensor3 out(shape);
  if (shape.n3 == 1) {
    for (std::size_t n = 0; n < a.size(); ++n) out.data()[n] = a.data()[n];
    return out;
  }
  auto& fft = thread_fft();
  std::vector<double> tube(shape.n3);
  std::vector<std::complex<double>> spectrum;
  for (std::size_t j = 0; j < shape.n2; ++j) {
    for (std::size_t i = 0; i < shape.n1; ++i) {
      for (std::size_t k = 0; k < shape.n3; ++k) tube[k] = a(i, j, k);
      fft.fwd(spectrum, tube);
      // Enforce conjugate symmetry exactly from the independent half.
      for (std::size_t k = 0; k < independent_slices(shape.n3); ++k) {
        if (is_self_conjugate(k, shape.n3)) {
          spectrum[k].imag(0.0);
        } else {
          spectrum[mirror_slice(k, shape.n3)] = std::conj(spectrum[k]);
        }
      }
      for (std::size_t k = 0; k < shape.n3; ++k) out(i, j, k) = spectrum[k];
    }
  }
  return out;
}

Tensor3 ifft3(const SpectralTensor3& a) {
  const auto& shape = a.shape();
  Tensor3 out(shape);
  auto check = [](const std::complex<double>& v, std::size_t i, std::size_t j, std::size_t k) {
    if (std::abs(v.imag()) > kImagResidueTol * (1.0 + std::abs(v))) {
      throw Error(Errc::SymmetryViolation,
                  "imaginary residue " + std::to_string(v.imag()) + " at (" + std::to_string(i) +
                      "," + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  };
  if (shape.n3 == 1) {
    for (std::size_t j = 0; j < shape.n2; ++j) {
      for (std::size_t i = 0; i < shape.n1; ++i) {
        check(a(i, j, 0), i, j, 0);
        out(i, j, 0) = a(i, j, 0).real();
      }
    }
    return out;
  }
  auto& fft = thread_fft();
  std::vector<std::complex<double>> spectrum(shape.n3);
  std::vector<std::complex<double>> tube;
  for (std::size_t j = 0; j < shape.n2; ++j) {
    for (std::size_t i = 0; i < shape.n1; ++i) {
      for (std::size_t k = 0; k < shape.n3; ++k) spectrum[k] = a(i, j, k);
      fft.inv(tube, spectrum);
      for (std::size_t k = 0; k < shape.n3; ++k) {
        check(tube[k], i, j, k);
        out(i, j, k) = tube[k].real();
      }
    }
  }
  return out;
}

}  // namespace tpca
