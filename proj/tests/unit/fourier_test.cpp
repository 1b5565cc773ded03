#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "tpca/fourier.hpp"
#include "tpca/norms.hpp"
#include "tpca/tproduct.hpp"

namespace tpca {
namespace {

using testing::random_tensor;

TEST(Fft3, DeltaTubeHasFlatSpectrum) {
  const Tensor3 delta(Shape3{1, 1, 4}, {1, 0, 0, 0});
  const auto f = fft3(delta);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(f(0, 0, k).real(), 1.0, 1e-15);
    EXPECT_NEAR(f(0, 0, k).imag(), 0.0, 1e-15);
  }
}

TEST(Fft3, IdentityTensorIsIdentityInEveryFourierSlice) {
  const auto f = fft3(identity_tensor(2, 3));
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_NEAR(std::abs(f(i, j, k) - std::complex<double>(i == j ? 1.0 : 0.0)), 0.0, 1e-15);
      }
    }
  }
}

TEST(Fft3, MatchesDirectDftOracle) {
  std::mt19937_64 rng(11);
  for (std::size_t n3 : {1u, 2u, 3u, 5u, 7u, 8u, 12u, 20u, 64u}) {
    const Tensor3 a = random_tensor(2, 3, n3, rng);
    const auto f = fft3(a);
    const auto oracle = testing::dft_slices(a);
    for (std::size_t k = 0; k < n3; ++k) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 2; ++i) {
          EXPECT_NEAR(std::abs(f(i, j, k) - oracle[k](i, j)), 0.0, 1e-11) << "n3=" << n3;
        }
      }
    }
  }
}

TEST(Fft3, RoundTripOnRandomShapes) {
  std::mt19937_64 rng(3);
  const Tensor3 fixed = random_tensor(3, 4, 5, rng);
  EXPECT_LT(relative_error(ifft3(fft3(fixed)), fixed), 1e-12);
  for (int trial = 0; trial < 200; ++trial) {
    const Tensor3 a = random_tensor(testing::random_dim(rng, 8), testing::random_dim(rng, 8),
                                    testing::random_dim(rng, 8), rng);
    ASSERT_LT(relative_error(ifft3(fft3(a)), a), 1e-12) << to_string(a.shape());
  }
}

TEST(Fft3, OutputIsExactlyConjugateSymmetric) {
  std::mt19937_64 rng(5);
  for (std::size_t n3 : {2u, 3u, 6u, 9u}) {
    const auto f = fft3(random_tensor(3, 2, n3, rng));
    for (std::size_t k = 1; k < n3; ++k) {
      for (std::size_t n = 0; n < 6; ++n) {
        const auto a = f.slice(k)[n];
        const auto b = f.slice(n3 - k)[n];
        EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-12);
      }
    }
  }
}

TEST(Fft3, ParsevalWithUnnormalizedForwardTransform) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Tensor3 a = random_tensor(testing::random_dim(rng, 6), testing::random_dim(rng, 6),
                                    testing::random_dim(rng, 8), rng);
    const SpectralTensor3 f = fft3(a);
    double spectral = 0.0;
    for (const auto& v : f.data()) spectral += std::norm(v);
    const double fro = norm(a, NormKind::Fro);
    EXPECT_NEAR(fro * fro * static_cast<double>(a.n3()), spectral, 1e-9 * spectral);
  }
}

TEST(Ifft3, FlatSpectrumIsDelta) {
  SpectralTensor3 flat(Shape3{1, 1, 4});
  for (auto& v : flat.data()) v = 1.0;
  EXPECT_EQ(ifft3(flat), Tensor3(Shape3{1, 1, 4}, {1, 0, 0, 0}));
}

TEST(Ifft3, BrokenSymmetryIsRejected) {
  std::mt19937_64 rng(2);
  auto f = fft3(random_tensor(2, 2, 4, rng));
  f(0, 1, 1) += std::complex<double>(0.0, 1e-3);
  EXPECT_TPCA_ERROR(ifft3(f), Errc::SymmetryViolation);

  SpectralTensor3 single(Shape3{1, 1, 1});
  single(0, 0, 0) = {1.0, 1e-3};
  EXPECT_TPCA_ERROR(ifft3(single), Errc::SymmetryViolation);
}

TEST(Ifft3, ResidueBelowToleranceIsDiscarded) {
  std::mt19937_64 rng(2);
  const Tensor3 a = random_tensor(2, 2, 4, rng);
  auto f = fft3(a);
  f(1, 1, 1) += std::complex<double>(0.0, 1e-13);
  EXPECT_LT(relative_error(ifft3(f), a), 1e-12);
}

TEST(Fourier, MirrorIndexing) {
  EXPECT_EQ(independent_slices(1), 1u);
  EXPECT_EQ(independent_slices(4), 3u);
  EXPECT_EQ(independent_slices(5), 3u);
  EXPECT_EQ(mirror_slice(1, 4), 3u);
  EXPECT_TRUE(is_self_conjugate(0, 5));
  EXPECT_TRUE(is_self_conjugate(2, 4));
  EXPECT_FALSE(is_self_conjugate(2, 5));
}

}  // namespace
}  // namespace tpca
