#pragma once

#include <cstddef>

#include "tpca/tensor.hpp"

namespace tpca {

/// Confusion counts of the detected support {|estimate| > threshold}
/// against a ground-truth mask (nonzero = positive).
struct SupportScores {
  std::size_t true_pos = 0;
  std::size_t false_pos = 0;
  std::size_t false_neg = 0;
  std::size_t true_neg = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

/// Empty predicted/true supports count as perfect precision/recall only when
/// the other side is empty too. Throws ShapeMismatch.
SupportScores support_scores(const Tensor3& estimate, const Tensor3& mask, double threshold);

}  // namespace tpca
