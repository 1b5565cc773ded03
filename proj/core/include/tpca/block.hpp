#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tpca/tensor.hpp"

namespace tpca {

/// Placement of one block on the n1 x n2 face. Every block spans all of n3.
struct BlockDescriptor {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;

  friend bool operator==(const BlockDescriptor&, const BlockDescriptor&) = default;
};

/// Tiling of an n1 x n2 face by b1 x b2 blocks in row-major order of their
/// offsets. Interior blocks are b1 x b2; the last block row/column absorbs
/// the remainder.
class BlockGrid {
 public:
  /// Throws ShapeMismatch unless 1 <= b1 <= n1 and 1 <= b2 <= n2.
  BlockGrid(const Shape3& shape, std::size_t b1, std::size_t b2);

  const Shape3& shape() const noexcept { return shape_; }
  std::size_t block_rows() const noexcept { return b1_; }
  std::size_t block_cols() const noexcept { return b2_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const BlockDescriptor& operator[](std::size_t p) const { return blocks_[p]; }
  std::span<const BlockDescriptor> descriptors() const noexcept { return blocks_; }

 private:
  Shape3 shape_;
  std::size_t b1_;
  std::size_t b2_;
  std::vector<BlockDescriptor> blocks_;
};

struct Block {
  BlockDescriptor where;
  Tensor3 data;
};

struct Partition {
  BlockGrid grid;
  std::vector<Block> blocks;
};

Tensor3 extract_block(const Tensor3& x, const BlockDescriptor& where);

/// Writes block into x at its descriptor. Throws ShapeMismatch.
void insert_block(Tensor3& x, const BlockDescriptor& where, const Tensor3& block);

Partition partition(const Tensor3& x, std::size_t b1, std::size_t b2);

/// Exact inverse of partition. Throws DescriptorMismatch when the block list
/// does not follow the grid (count, order or placement) and ShapeMismatch
/// when a block's data disagrees with its own descriptor.
Tensor3 concatenate(const BlockGrid& grid, std::span<const Block> blocks);

/// x - l, entrywise. Throws ShapeMismatch.
Tensor3 sparse_residual(const Tensor3& x, const Tensor3& l);

}  // namespace tpca
