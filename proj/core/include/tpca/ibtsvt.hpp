#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tpca/tensor.hpp"

namespace tpca {

/// Parameters of iterative block tensor singular value thresholding.
///
/// Each iteration k = 1, 2, ... updates eta_k = eta_{k-1} * mu, sets
/// tau_k = tau0 / eta_k and replaces every block by svt(block, tau_k). The
/// loop stops once ||X_k - X_{k-1}||_F / ||X_{k-1}||_F <= eps over the
/// concatenated tensor, or after max_iters iterations.
struct IbtsvtConfig {
  /// Explicit initial threshold; when unset tau0 = tau_scale / sqrt(n n3)
  /// with n = max(block_rows, block_cols).
  std::optional<double> tau0;
  double tau_scale = 20.0;
  double mu = 1.8;
  double eta0 = 1.0;
  double eps = 1e-2;
  int max_iters = 50;
  std::size_t block_rows = 2;
  std::size_t block_cols = 2;
  /// Worker threads for the per-block step; results do not depend on it.
  std::size_t threads = 1;
  /// Record tnn of every block after every iteration (costly on big inputs).
  bool track_block_tnn = false;

  /// Throws InvalidArgument on out-of-range parameters.
  void validate() const;
  double resolved_tau0(std::size_t n3) const;
};

struct DecompositionResult {
  Tensor3 l;  // low-rank part
  Tensor3 s;  // x - l
  double tau0 = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Relative change of the concatenated tensor at each iteration.
  std::vector<double> history;
  /// Threshold applied at each iteration.
  std::vector<double> thresholds;
  /// Tubal rank of each final low-rank block, in grid order.
  std::vector<std::size_t> block_tubal_ranks;
  /// block_tnn[k][p]: tnn of block p after k iterations (k = 0 is the input).
  /// Empty unless IbtsvtConfig::track_block_tnn.
  std::vector<std::vector<double>> block_tnn;
};

/// Throws ShapeMismatch if the block sides do not fit x and propagates
/// NumericalFailure from the slice SVDs. Hitting max_iters is reported via
/// DecompositionResult::converged, not as an error.
DecompositionResult ibtsvt(const Tensor3& x, const IbtsvtConfig& cfg);

}  // namespace tpca
