#include <cmath>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "tpca/norms.hpp"

namespace tpca {
namespace {

TEST(Norms, ValuesOnSmallTensor) {
  // Tubes (0,0,:) = (3,4) and (0,1,:) = (0,-12).
  const Tensor3 a(Shape3{1, 2, 2}, {3, 0, 4, -12});
  EXPECT_DOUBLE_EQ(norm(a, NormKind::Fro), 13.0);
  EXPECT_DOUBLE_EQ(norm(a, NormKind::Inf), 12.0);
  EXPECT_DOUBLE_EQ(norm(a, NormKind::L1), 19.0);
  EXPECT_DOUBLE_EQ(norm(a, NormKind::L112), 5.0 + 12.0);
}

TEST(Norms, AllOnes) {
  Tensor3 ones(Shape3{2, 2, 2});
  for (auto& v : ones.data()) v = 1.0;
  EXPECT_DOUBLE_EQ(norm(ones, NormKind::Fro), std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(norm(ones, NormKind::Inf), 1.0);
  EXPECT_DOUBLE_EQ(norm(ones, NormKind::L1), 8.0);
  EXPECT_DOUBLE_EQ(norm(ones, NormKind::L112), 4.0 * std::sqrt(2.0));
}

TEST(Norms, ZeroTensor) {
  const Tensor3 z(Shape3{3, 2, 4});
  for (auto kind : {NormKind::Fro, NormKind::Inf, NormKind::L1, NormKind::L112}) {
    EXPECT_EQ(norm(z, kind), 0.0);
  }
}

TEST(Norms, NamesRoundTrip) {
  for (auto kind : {NormKind::Fro, NormKind::Inf, NormKind::L1, NormKind::L112}) {
    EXPECT_EQ(parse_norm_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_norm_kind("l2").has_value());
}

TEST(RelativeError, ZeroReferenceFallsBackToAbsolute) {
  const Tensor3 ref(Shape3{1, 1, 2}, {3, 4});
  const Tensor3 est(Shape3{1, 1, 2}, {3, 4});
  EXPECT_EQ(relative_error(est, ref), 0.0);
  EXPECT_DOUBLE_EQ(relative_error(Tensor3(Shape3{1, 1, 2}), ref), 1.0);
  EXPECT_DOUBLE_EQ(relative_error(ref, Tensor3(Shape3{1, 1, 2})), 5.0);
  EXPECT_TPCA_ERROR(relative_error(ref, Tensor3(Shape3{2, 1, 1})), Errc::ShapeMismatch);
}

}  // namespace
}  // namespace tpca
