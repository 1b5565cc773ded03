#include "tpca/block.hpp"

#include <algorithm>
#include <string>

namespace tpca {

BlockGrid::BlockGrid(const Shape3& shape, std::size_t b1, std::size_t b2)
    : shape_(shape), b1_(b1), b2_(b2) {
  if (b1 == 0 || b2 == 0 || b1 > shape.n1 || b2 > shape.n2) {
    throw Error(Errc::ShapeMismatch, "block " + std::to_string(b1) + "x" + std::to_string(b2) +
                                         " does not fit tensor " + to_string(shape));
  }
  for (std::size_t row = 0; row < shape.n1; row += b1) {
    for (std::size_t col = 0; col < shape.n2; col += b2) {
      blocks_.push_back({row, col, std::min(b1, shape.n1 - row), std::min(b2, shape.n2 - col)});
    }
  }
}

Tensor3 extract_block(const Tensor3& x, const BlockDescriptor& where) {
  Tensor3 out(Shape3{where.rows, where.cols, x.n3()});
  for (std::size_t k = 0; k < x.n3(); ++k) {
    for (std::size_t j = 0; j < where.cols; ++j) {
      for (std::size_t i = 0; i < where.rows; ++i) out(i, j, k) = x(where.row + i, where.col + j, k);
    }
  }
  return out;
}

void insert_block(Tensor3& x, const BlockDescriptor& where, const Tensor3& block) {
  if (block.shape() != Shape3{where.rows, where.cols, x.n3()} || where.row + where.rows > x.n1() ||
      where.col + where.cols > x.n2()) {
    throw Error(Errc::ShapeMismatch, "block " + to_string(block.shape()) + " does not fit at (" +
                                         std::to_string(where.row) + "," + std::to_string(where.col) +
                                         ") of " + to_string(x.shape()));
  }
  for (std::size_t k = 0; k < x.n3(); ++k) {
    for (std::size_t j = 0; j < where.cols; ++j) {
      for (std::size_t i = 0; i < where.rows; ++i) x(where.row + i, where.col + j, k) = block(i, j, k);
    }
  }
}

Partition partition(const Tensor3& x, std::size_t b1, std::size_t b2) {
  Partition out{BlockGrid(x.shape(), b1, b2), {}};
  out.blocks.reserve(out.grid.size());
  for (const auto& where : out.grid.descriptors()) out.blocks.push_back({where, extract_block(x, where)});
  return out;
}

Tensor3 concatenate(const BlockGrid& grid, std::span<const Block> blocks) {
  if (blocks.size() != grid.size()) {
    throw Error(Errc::DescriptorMismatch, "expected " + std::to_string(grid.size()) + " blocks, got " +
                                              std::to_string(blocks.size()));
  }
  Tensor3 out(grid.shape());
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    if (!(blocks[p].where == grid[p])) {
      throw Error(Errc::DescriptorMismatch, "block " + std::to_string(p) + " is not placed as the grid expects");
    }
    insert_block(out, grid[p], blocks[p].data);
  }
  return out;
}

Tensor3 sparse_residual(const Tensor3& x, const Tensor3& l) { return x - l; }

}  // namespace tpca
