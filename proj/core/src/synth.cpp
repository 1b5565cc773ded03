#include "tpca/synth.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "tpca/tproduct.hpp"

namespace tpca::synth {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::below(std::size_t bound) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(bound));
}

void LowRankSpec::validate() const {
  if (n1 == 0 || n2 == 0 || n3 == 0) throw Error(Errc::InvalidArgument, "dimensions must be >= 1");
  if (rank == 0 || rank > std::min(n1, n2)) {
    throw Error(Errc::InvalidArgument, "rank must lie in [1, min(n1, n2)]");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) throw Error(Errc::InvalidArgument, "rho must lie in [0, 1]");
  if (!std::isfinite(amplitude)) throw Error(Errc::InvalidArgument, "amplitude must be finite");
}

LowRankSample lowrank(const LowRankSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Tensor3 g1(Shape3{spec.n1, spec.rank, spec.n3});
  Tensor3 g2(Shape3{spec.rank, spec.n2, spec.n3});
  for (auto& v : g1.data()) v = rng.normal();
  for (auto& v : g2.data()) v = rng.normal();
  Tensor3 l0 = tproduct(g1, g2);

  Tensor3 s0(l0.shape());
  const std::size_t total = s0.size();
  const auto spikes = static_cast<std::size_t>(std::llround(spec.rho * static_cast<double>(total)));
  // Partial Fisher-Yates: the first `spikes` slots of the permutation.
  std::vector<std::size_t> order(total);
  for (std::size_t n = 0; n < total; ++n) order[n] = n;
  for (std::size_t n = 0; n < spikes; ++n) {
    std::swap(order[n], order[n + rng.below(total - n)]);
    s0.data()[order[n]] = rng.uniform() < 0.5 ? -spec.amplitude : spec.amplitude;
  }
  Tensor3 x = l0 + s0;
  return {std::move(x), std::move(l0), std::move(s0)};
}

void VideoSpec::validate() const {
  if (rows == 0 || cols == 0 || frames == 0) throw Error(Errc::InvalidArgument, "dimensions must be >= 1");
  if (square == 0 || square > rows || square > cols) {
    throw Error(Errc::InvalidArgument, "square side must lie in [1, min(rows, cols)]");
  }
  if (!std::isfinite(background) || !std::isfinite(amplitude)) {
    throw Error(Errc::InvalidArgument, "amplitudes must be finite");
  }
}

VideoSample video(const VideoSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<double> p(spec.rows), q(spec.cols);
  for (auto& v : p) v = 0.5 + 0.5 * rng.uniform();
  for (auto& v : q) v = 0.5 + 0.5 * rng.uniform();

  const Shape3 shape{spec.rows, spec.cols, spec.frames};
  Tensor3 l0(shape), s0(shape), mask(shape);
  for (std::size_t k = 0; k < spec.frames; ++k) {
    for (std::size_t j = 0; j < spec.cols; ++j) {
      for (std::size_t i = 0; i < spec.rows; ++i) l0(i, j, k) = spec.background * p[i] * q[j];
    }
  }

  // Position moves by a fixed velocity and reflects at the borders.
  const auto row_span = static_cast<long>(spec.rows - spec.square);
  const auto col_span = static_cast<long>(spec.cols - spec.square);
  long r = static_cast<long>(rng.below(static_cast<std::size_t>(row_span) + 1));
  long c = static_cast<long>(rng.below(static_cast<std::size_t>(col_span) + 1));
  long dr = (2 + static_cast<long>(rng.below(2))) * (rng.uniform() < 0.5 ? -1 : 1);
  long dc = (2 + static_cast<long>(rng.below(2))) * (rng.uniform() < 0.5 ? -1 : 1);
  auto reflect = [](long& pos, long& vel, long span) {
    if (span == 0) {
      pos = 0;
      return;
    }
    pos += vel;
    while (pos < 0 || pos > span) {
      if (pos < 0) pos = -pos;
      if (pos > span) pos = 2 * span - pos;
      vel = -vel;
    }
  };
  for (std::size_t k = 0; k < spec.frames; ++k) {
    for (std::size_t j = 0; j < spec.square; ++j) {
      for (std::size_t i = 0; i < spec.square; ++i) {
        s0(static_cast<std::size_t>(r) + i, static_cast<std::size_t>(c) + j, k) = spec.amplitude;
        mask(static_cast<std::size_t>(r) + i, static_cast<std::size_t>(c) + j, k) = 1.0;
      }
    }
    reflect(r, dr, row_span);
    reflect(c, dc, col_span);
  }
  Tensor3 x = l0 + s0;
  return {std::move(x), std::move(l0), std::move(s0), std::move(mask)};
}

}  // namespace tpca::synth
