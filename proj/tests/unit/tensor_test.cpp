#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "tpca/tensor.hpp"

namespace tpca {
namespace {

TEST(Tensor3, LayoutIsIFastestThenJThenK) {
  Tensor3 t(Shape3{2, 3, 4});
  for (std::size_t n = 0; n < t.size(); ++n) t.data()[n] = static_cast<double>(n);
  EXPECT_EQ(t(1, 0, 0), 1.0);
  EXPECT_EQ(t(0, 1, 0), 2.0);
  EXPECT_EQ(t(0, 0, 1), 6.0);
  EXPECT_EQ(t(1, 2, 3), 1 + 2 * 2 + 6 * 3);
  ASSERT_EQ(t.slice(2).size(), 6u);
  EXPECT_EQ(t.slice(2)[0], 12.0);
  EXPECT_EQ(t.tube(1, 1), (std::vector<double>{3, 9, 15, 21}));
}

TEST(Tensor3, RejectsZeroExtents) {
  EXPECT_TPCA_ERROR(Tensor3(Shape3{0, 1, 1}), Errc::InvalidArgument);
  EXPECT_TPCA_ERROR(Tensor3(Shape3{1, 1, 0}), Errc::InvalidArgument);
}

TEST(Tensor3, ExternalDataMustMatchAndBeFinite) {
  EXPECT_TPCA_ERROR(Tensor3(Shape3{2, 2, 1}, {1, 2, 3}), Errc::ShapeMismatch);
  EXPECT_TPCA_ERROR(Tensor3(Shape3{1, 1, 2}, {1, std::numeric_limits<double>::quiet_NaN()}),
                    Errc::InvalidArgument);
  EXPECT_TPCA_ERROR(Tensor3(Shape3{1, 1, 1}, {std::numeric_limits<double>::infinity()}), Errc::InvalidArgument);
}

TEST(Tensor3, ArithmeticChecksShapes) {
  Tensor3 a(Shape3{1, 1, 2}, {1, 2});
  Tensor3 b(Shape3{1, 1, 2}, {3, 5});
  EXPECT_EQ(a + b, Tensor3(Shape3{1, 1, 2}, {4, 7}));
  EXPECT_EQ(b - a, Tensor3(Shape3{1, 1, 2}, {2, 3}));
  EXPECT_EQ(2.0 * a, Tensor3(Shape3{1, 1, 2}, {2, 4}));
  EXPECT_TPCA_ERROR(a += Tensor3(Shape3{2, 1, 1}), Errc::ShapeMismatch);
}

TEST(Tensor3, SetTubeValidatesLength) {
  Tensor3 t(Shape3{1, 1, 3});
  const std::vector<double> good{1, 2, 3};
  t.set_tube(0, 0, good);
  EXPECT_EQ(t.tube(0, 0), good);
  const std::vector<double> bad{1, 2};
  EXPECT_TPCA_ERROR(t.set_tube(0, 0, bad), Errc::ShapeMismatch);
}

}  // namespace
}  // namespace tpca
