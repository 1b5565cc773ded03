#include "tpca/norms.hpp"

#include <algorithm>
#include <cmath>

namespace tpca {

double norm(const Tensor3& a, NormKind kind) {
  switch (kind) {
    case NormKind::Fro: {
      double sum = 0.0;
      for (double v : a.data()) sum += v * v;
      return std::sqrt(sum);
    }
    case NormKind::Inf: {
      double peak = 0.0;
      for (double v : a.data()) peak = std::max(peak, std::abs(v));
      return peak;
    }
    case NormKind::L1: {
      double sum = 0.0;
      for (double v : a.data()) sum += std::abs(v);
      return sum;
    }
    case NormKind::L112: {
      double sum = 0.0;
      for (std::size_t j = 0; j < a.n2(); ++j) {
        for (std::size_t i = 0; i < a.n1(); ++i) {
          double tube = 0.0;
          for (std::size_t k = 0; k < a.n3(); ++k) tube += a(i, j, k) * a(i, j, k);
          sum += std::sqrt(tube);
        }
      }
      return sum;
    }
  }
  return 0.0;
}

std::string_view to_string(NormKind kind) noexcept {
  switch (kind) {
    case NormKind::Fro: return "fro";
    case NormKind::Inf: return "inf";
    case NormKind::L1: return "l1";
    case NormKind::L112: return "l112";
  }
  return "?";
}

std::optional<NormKind> parse_norm_kind(std::string_view name) noexcept {
  for (auto kind : {NormKind::Fro, NormKind::Inf, NormKind::L1, NormKind::L112}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

double relative_error(const Tensor3& estimate, const Tensor3& reference) {
  const double diff = norm(estimate - reference, NormKind::Fro);
  const double scale = norm(reference, NormKind::Fro);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace tpca
