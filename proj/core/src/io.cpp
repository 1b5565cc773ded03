#include "tpca/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

namespace tpca::io {
namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(bytes[at + b]) << (8 * b);
  return v;
}

std::uint64_t get_u64(std::span<const std::uint8_t> bytes, std::size_t at) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(bytes[at + b]) << (8 * b);
  return v;
}

int maxval_for(int bit_depth) {
  if (bit_depth == 8) return 255;
  if (bit_depth == 16) return 65535;
  throw Error(Errc::InvalidArgument, "bit depth must be 8 or 16, got " + std::to_string(bit_depth));
}

// Cursor over a P5 header: magic, width, height, maxval separated by
// whitespace, '#' comments running to end of line.
class PgmHeaderReader {
 public:
  explicit PgmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t next_number() {
    skip_space_and_comments();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(Errc::BadHeader, "graymap header value too large");
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw Error(Errc::BadHeader, "malformed graymap header");
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_start() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(Errc::BadHeader, "missing separator before graymap raster");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

std::uint16_t quantize(double scaled) {
  // std::round rounds half away from zero.
  return static_cast<std::uint16_t>(std::clamp(std::round(scaled), 0.0, 255.0));
}

}  // namespace

std::vector<std::uint8_t> encode_tensor(const Tensor3& a) {
  const auto& shape = a.shape();
  constexpr auto u32_max = std::numeric_limits<std::uint32_t>::max();
  if (shape.n1 > u32_max || shape.n2 > u32_max || shape.n3 > u32_max) {
    throw Error(Errc::InvalidArgument, "tensor extents exceed the file format");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kTensorHeaderBytes + 8 * a.size());
  out.insert(out.end(), std::begin(kTensorMagic), std::end(kTensorMagic));
  put_u32(out, kTensorVersion);
  put_u32(out, static_cast<std::uint32_t>(shape.n1));
  put_u32(out, static_cast<std::uint32_t>(shape.n2));
  put_u32(out, static_cast<std::uint32_t>(shape.n3));
  for (double v : a.data()) put_u64(out, std::bit_cast<std::uint64_t>(v));
  return out;
}

Tensor3 decode_tensor(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kTensorMagic, 4) != 0) {
    throw Error(Errc::BadMagic, "not a TEN3 tensor file");
  }
  if (bytes.size() < kTensorHeaderBytes) throw Error(Errc::TruncatedPayload, "header is incomplete");
  const std::uint32_t version = get_u32(bytes, 4);
  if (version != kTensorVersion) {
    throw Error(Errc::BadVersion, "unsupported tensor file version " + std::to_string(version));
  }
  const Shape3 shape{get_u32(bytes, 8), get_u32(bytes, 12), get_u32(bytes, 16)};
  if (shape.n1 == 0 || shape.n2 == 0 || shape.n3 == 0) {
    throw Error(Errc::BadHeader, "zero extent in header " + to_string(shape));
  }
  const std::size_t payload = bytes.size() - kTensorHeaderBytes;
  // Guard the multiplication: a hostile header may promise more than size_t holds.
  const auto limit = std::numeric_limits<std::size_t>::max() / 8;
  const bool too_big = shape.n1 > limit / shape.n2 || shape.n1 * shape.n2 > limit / shape.n3;
  const std::size_t expected = too_big ? limit : shape.size() * 8;
  if (too_big || payload < expected) {
    throw Error(Errc::TruncatedPayload, "header " + to_string(shape) + " promises " +
                                            std::to_string(shape.size()) + " entries, payload holds " +
                                            std::to_string(payload / 8));
  }
  if (payload > expected) {
    throw Error(Errc::TrailingBytes, std::to_string(payload - expected) + " bytes after payload");
  }
  std::vector<double> data(shape.size());
  for (std::size_t n = 0; n < data.size(); ++n) {
    data[n] = std::bit_cast<double>(get_u64(bytes, kTensorHeaderBytes + 8 * n));
  }
  return Tensor3(shape, std::move(data));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::IoError, "failed reading " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::IoError, "failed writing " + path.string());
}

void write_tensor(const std::filesystem::path& path, const Tensor3& a) {
  write_file(path, encode_tensor(a));
}

Tensor3 read_tensor(const std::filesystem::path& path) {
  return decode_tensor(read_file(path));
}

std::string_view to_string(Normalize mode) noexcept {
  return mode == Normalize::Unit ? "unit" : "none";
}

std::string_view to_string(Render mode) noexcept {
  return mode == Render::Clip ? "clip" : "rescale";
}

Tensor3 frames_to_tensor(const FrameSequence& seq, Normalize normalize) {
  if (seq.frames.empty()) throw Error(Errc::EmptySequence, "no frames to stack");
  const std::size_t rows = seq.frames.front().rows;
  const std::size_t cols = seq.frames.front().cols;
  for (const auto& f : seq.frames) {
    if (f.rows != rows || f.cols != cols || f.pixels.size() != rows * cols) {
      throw Error(Errc::InconsistentDims, "frame " + std::to_string(f.rows) + "x" + std::to_string(f.cols) +
                                              " differs from " + std::to_string(rows) + "x" +
                                              std::to_string(cols));
    }
  }
  const double divisor = normalize == Normalize::Unit ? maxval_for(seq.bit_depth) : 1.0;
  Tensor3 out(Shape3{rows, cols, seq.frames.size()});
  for (std::size_t k = 0; k < seq.frames.size(); ++k) {
    const auto& f = seq.frames[k];
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < rows; ++r) out(r, c, k) = f.at(r, c) / divisor;
    }
  }
  return out;
}

FrameSequence tensor_to_frames(const Tensor3& a, Render render) {
  double lo = 0.0;
  double span = 1.0;
  if (render == Render::Rescale) {
    const auto [mn, mx] = std::minmax_element(a.data().begin(), a.data().end());
    lo = *mn;
    span = *mx - *mn;
  }
  FrameSequence seq;
  seq.bit_depth = 8;
  seq.frames.reserve(a.n3());
  for (std::size_t k = 0; k < a.n3(); ++k) {
    Frame f{a.n1(), a.n2(), std::vector<std::uint16_t>(a.n1() * a.n2())};
    for (std::size_t r = 0; r < a.n1(); ++r) {
      for (std::size_t c = 0; c < a.n2(); ++c) {
        const double v = a(r, c, k);
        double unit = 0.0;
        if (render == Render::Clip) {
          unit = std::clamp(v, 0.0, 1.0);
        } else if (span > 0.0) {
          unit = (v - lo) / span;
        }
        f.pixels[r * a.n2() + c] = quantize(unit * 255.0);
      }
    }
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

Frame decode_pgm(std::span<const std::uint8_t> bytes, int* bit_depth) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(Errc::BadMagic, "not a binary graymap (P5)");
  }
  PgmHeaderReader header(bytes);
  const std::size_t cols = header.next_number();
  const std::size_t rows = header.next_number();
  const std::size_t maxval = header.next_number();
  if (rows == 0 || cols == 0) throw Error(Errc::BadHeader, "graymap has zero extent");
  if (maxval != 255 && maxval != 65535) {
    throw Error(Errc::BadHeader, "graymap maxval must be 255 or 65535, got " + std::to_string(maxval));
  }
  const std::size_t start = header.raster_start();
  const std::size_t sample = maxval == 255 ? 1 : 2;
  const std::size_t need = rows * cols * sample;
  const std::size_t have = bytes.size() - std::min(start, bytes.size());
  if (have < need) throw Error(Errc::TruncatedPayload, "graymap raster is short");
  if (have > need) throw Error(Errc::TrailingBytes, "bytes after graymap raster");

  Frame f{rows, cols, std::vector<std::uint16_t>(rows * cols)};
  for (std::size_t n = 0; n < rows * cols; ++n) {
    f.pixels[n] = sample == 1 ? bytes[start + n]
                              : static_cast<std::uint16_t>((bytes[start + 2 * n] << 8) | bytes[start + 2 * n + 1]);
  }
  if (bit_depth) *bit_depth = sample == 1 ? 8 : 16;
  return f;
}

std::vector<std::uint8_t> encode_pgm(const Frame& frame, int bit_depth) {
  const int maxval = maxval_for(bit_depth);
  const std::string header =
      "P5\n" + std::to_string(frame.cols) + " " + std::to_string(frame.rows) + "\n" + std::to_string(maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (std::uint16_t p : frame.pixels) {
    if (p > maxval) throw Error(Errc::InvalidArgument, "pixel exceeds maxval");
    if (bit_depth == 16) out.push_back(static_cast<std::uint8_t>(p >> 8));
    out.push_back(static_cast<std::uint8_t>(p & 0xff));
  }
  return out;
}

Frame read_pgm(const std::filesystem::path& path, int* bit_depth) {
  return decode_pgm(read_file(path), bit_depth);
}

void write_pgm(const std::filesystem::path& path, const Frame& frame, int bit_depth) {
  write_file(path, encode_pgm(frame, bit_depth));
}

FrameSequence read_frame_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw Error(Errc::IoError, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  FrameSequence seq;
  for (std::size_t n = 0; n < files.size(); ++n) {
    int depth = 8;
    seq.frames.push_back(read_pgm(files[n], &depth));
    if (n == 0) {
      seq.bit_depth = depth;
    } else if (depth != seq.bit_depth) {
      throw Error(Errc::InconsistentDims, files[n].string() + " has a different bit depth");
    }
  }
  if (seq.frames.empty()) throw Error(Errc::EmptySequence, "no .pgm frames in " + dir.string());
  return seq;
}

void write_frame_directory(const std::filesystem::path& dir, const FrameSequence& seq) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + dir.string() + ": " + ec.message());
  for (std::size_t k = 0; k < seq.frames.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%04zu.pgm", k);
    write_pgm(dir / name, seq.frames[k], seq.bit_depth);
  }
}

}  // namespace tpca::io
