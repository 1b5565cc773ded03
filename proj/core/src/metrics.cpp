#include "tpca/metrics.hpp"

#include <cmath>

namespace tpca {

SupportScores support_scores(const Tensor3& estimate, const Tensor3& mask, double threshold) {
  if (estimate.shape() != mask.shape()) {
    throw Error(Errc::ShapeMismatch, "estimate " + to_string(estimate.shape()) + " vs mask " +
                                         to_string(mask.shape()));
  }
  SupportScores out;
  for (std::size_t n = 0; n < estimate.size(); ++n) {
    const bool detected = std::abs(estimate.data()[n]) > threshold;
    const bool truth = mask.data()[n] != 0.0;
    if (detected && truth) ++out.true_pos;
    else if (detected) ++out.false_pos;
    else if (truth) ++out.false_neg;
    else ++out.true_neg;
  }
  const auto ratio = [](std::size_t hit, std::size_t miss, std::size_t other_miss) {
    if (hit + miss == 0) return other_miss == 0 ? 1.0 : 0.0;
    return static_cast<double>(hit) / static_cast<double>(hit + miss);
  };
  out.precision = ratio(out.true_pos, out.false_pos, out.false_neg);
  out.recall = ratio(out.true_pos, out.false_neg, out.false_pos);
  const double sum = out.precision + out.recall;
  out.f_measure = sum > 0.0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

}  // namespace tpca
