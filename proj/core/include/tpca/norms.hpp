#pragma once

#include <optional>
#include <string_view>

#include "tpca/tensor.hpp"

namespace tpca {

enum class NormKind {
  Fro,   // sqrt of the sum of squared entries
  Inf,   // largest entry magnitude
  L1,    // sum of entry magnitudes
  L112,  // sum over (i,j) of the Frobenius norm of tube (i,j,:)
};

double norm(const Tensor3& a, NormKind kind);

std::string_view to_string(NormKind kind) noexcept;
std::optional<NormKind> parse_norm_kind(std::string_view name) noexcept;

/// ||estimate - reference||_F / ||reference||_F; the absolute error when the
/// reference is zero. Throws ShapeMismatch.
double relative_error(const Tensor3& estimate, const Tensor3& reference);

}  // namespace tpca
