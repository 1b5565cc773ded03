#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "tpca/tensor.hpp"

namespace tpca::synth {

/// Seeded generator whose output is identical on every platform: the
/// mt19937_64 stream is fixed by the standard and the transforms below are
/// ours, unlike std::*_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                       // [0, 1)
  double normal();                        // Box-Muller
  std::size_t below(std::size_t bound);   // [0, bound)

 private:
  std::mt19937_64 engine_;
};

struct LowRankSpec {
  std::size_t n1 = 40;
  std::size_t n2 = 40;
  std::size_t n3 = 10;
  std::size_t rank = 2;
  double rho = 0.05;       // fraction of entries carrying a spike
  double amplitude = 1.0;  // spike magnitude, random sign
  std::uint64_t seed = 0;

  void validate() const;
};

/// x = l0 + s0 with l0 = g1 * g2 (Gaussian n1 x r x n3 and r x n2 x n3
/// factors, so tubal rank r) and s0 holding round(rho n1 n2 n3) spikes.
struct LowRankSample {
  Tensor3 x;
  Tensor3 l0;
  Tensor3 s0;
};

LowRankSample lowrank(const LowRankSpec& spec);

struct VideoSpec {
  std::size_t rows = 32;
  std::size_t cols = 32;
  std::size_t frames = 16;
  std::size_t square = 6;
  double background = 1.0;  // peak of the rank-1 background
  double amplitude = 1.0;   // added inside the moving square
  std::uint64_t seed = 0;

  void validate() const;
};

/// Static rank-1 background background * p_i * q_j with p, q in [0.5, 1],
/// plus a square moving 2..3 pixels per frame along each axis and bouncing
/// off the borders. mask is 1 exactly on the square's pixels per frame.
struct VideoSample {
  Tensor3 x;
  Tensor3 l0;
  Tensor3 s0;
  Tensor3 mask;
};

VideoSample video(const VideoSpec& spec);

}  // namespace tpca::synth
