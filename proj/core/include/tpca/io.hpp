#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tpca/tensor.hpp"

namespace tpca::io {

// Tensor file layout, all integers and doubles little-endian:
//   bytes 0..3   magic "TEN3"
//   bytes 4..7   u32 version (1)
//   bytes 8..19  u32 n1, n2, n3
//   then n1*n2*n3 IEEE-754 binary64 values, i fastest, then j, then k.
inline constexpr char kTensorMagic[4] = {'T', 'E', 'N', '3'};
inline constexpr std::uint32_t kTensorVersion = 1;
inline constexpr std::size_t kTensorHeaderBytes = 20;

std::vector<std::uint8_t> encode_tensor(const Tensor3& a);

/// Throws BadMagic, BadVersion, BadHeader, TruncatedPayload or TrailingBytes.
Tensor3 decode_tensor(std::span<const std::uint8_t> bytes);

/// File wrappers; add IoError for filesystem failures.
void write_tensor(const std::filesystem::path& path, const Tensor3& a);
Tensor3 read_tensor(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Grayscale frame, row-major pixels.
struct Frame {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint16_t> pixels;

  std::uint16_t at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
};

/// Equally sized frames sharing one bit depth (8 or 16).
struct FrameSequence {
  int bit_depth = 8;
  std::vector<Frame> frames;
};

enum class Normalize { None, Unit };
enum class Render { Clip, Rescale };

std::string_view to_string(Normalize mode) noexcept;
std::string_view to_string(Render mode) noexcept;

/// Frame k becomes frontal slice k with pixel (r, c) at tensor (r, c, k).
/// Unit normalization divides by 255 or 65535. Throws EmptySequence or
/// InconsistentDims.
Tensor3 frames_to_tensor(const FrameSequence& frames, Normalize normalize);

/// 8-bit rendering of every frontal slice. Clip clamps to [0, 1] and scales
/// by 255; Rescale maps [min, max] of the whole tensor affinely onto
/// [0, 255]. Rounding is half away from zero.
FrameSequence tensor_to_frames(const Tensor3& a, Render render);

/// Binary graymap (P5) with maxval 255 or 65535 (16-bit samples big-endian).
Frame decode_pgm(std::span<const std::uint8_t> bytes, int* bit_depth = nullptr);
std::vector<std::uint8_t> encode_pgm(const Frame& frame, int bit_depth);

Frame read_pgm(const std::filesystem::path& path, int* bit_depth = nullptr);
void write_pgm(const std::filesystem::path& path, const Frame& frame, int bit_depth);

/// All *.pgm files of a directory in lexicographic filename order.
FrameSequence read_frame_directory(const std::filesystem::path& dir);

/// Writes frame_0000.pgm, frame_0001.pgm, ... into dir (created if needed).
void write_frame_directory(const std::filesystem::path& dir, const FrameSequence& frames);

}  // namespace tpca::io
