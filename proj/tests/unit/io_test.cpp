#include <cstring>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"
#include "tpca/io.hpp"

namespace tpca::io {
namespace {

using tpca::testing::random_tensor;
using tpca::testing::TempDir;

std::vector<std::uint8_t> raw_header(const char* magic, std::uint32_t version, std::uint32_t n1,
                                     std::uint32_t n2, std::uint32_t n3) {
  std::vector<std::uint8_t> out(magic, magic + 4);
  for (std::uint32_t v : {version, n1, n2, n3}) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  }
  return out;
}

TEST(TensorFile, LayoutIsLittleEndianIFastest) {
  const Tensor3 a(Shape3{2, 1, 1}, {1.0, -2.0});
  const auto bytes = encode_tensor(a);
  ASSERT_EQ(bytes.size(), 20u + 16u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "TEN3");
  EXPECT_EQ(bytes[4], 1u);
  EXPECT_EQ(bytes[8], 2u);
  EXPECT_EQ(bytes[12], 1u);
  EXPECT_EQ(bytes[16], 1u);
  // 1.0 = 0x3FF0000000000000, stored low byte first.
  EXPECT_EQ(bytes[20 + 7], 0x3Fu);
  EXPECT_EQ(bytes[20 + 6], 0xF0u);
  EXPECT_EQ(bytes[28 + 7], 0xC0u);
}

TEST(TensorFile, RoundTripIsBitwise) {
  std::mt19937_64 rng(139);
  TempDir dir;
  const Tensor3 a = random_tensor(3, 4, 5, rng);
  write_tensor(dir / "a.ten3", a);
  EXPECT_EQ(read_tensor(dir / "a.ten3"), a);

  Tensor3 awkward(Shape3{2, 2, 1}, {-0.0, 5e-324, 1.7976931348623157e308, 0.1});
  const Tensor3 back = decode_tensor(encode_tensor(awkward));
  EXPECT_EQ(std::memcmp(back.data().data(), awkward.data().data(), 32), 0);
}

TEST(TensorFile, BadMagic) {
  auto bytes = encode_tensor(Tensor3(Shape3{1, 1, 1}));
  std::memcpy(bytes.data(), "XXXX", 4);
  EXPECT_TPCA_ERROR(decode_tensor(bytes), Errc::BadMagic);
  EXPECT_TPCA_ERROR(decode_tensor(std::vector<std::uint8_t>{'T', 'E'}), Errc::BadMagic);
}

TEST(TensorFile, TruncatedPayload) {
  auto bytes = raw_header("TEN3", 1, 10, 10, 10);
  bytes.resize(bytes.size() + 999 * 8, 0);
  EXPECT_TPCA_ERROR(decode_tensor(bytes), Errc::TruncatedPayload);
  EXPECT_TPCA_ERROR(decode_tensor(raw_header("TEN3", 1, 1, 1, 1)), Errc::TruncatedPayload);
  auto short_header = raw_header("TEN3", 1, 1, 1, 1);
  short_header.resize(12);
  EXPECT_TPCA_ERROR(decode_tensor(short_header), Errc::TruncatedPayload);
  EXPECT_TPCA_ERROR(decode_tensor(raw_header("TEN3", 1, 0xFFFFFFFF, 0xFFFFFFFF, 0xFFFFFFFF)),
                    Errc::TruncatedPayload);
}

TEST(TensorFile, OtherHeaderErrors) {
  EXPECT_TPCA_ERROR(decode_tensor(raw_header("TEN3", 2, 1, 1, 1)), Errc::BadVersion);
  EXPECT_TPCA_ERROR(decode_tensor(raw_header("TEN3", 1, 0, 1, 1)), Errc::BadHeader);
  auto bytes = encode_tensor(Tensor3(Shape3{1, 1, 1}));
  bytes.push_back(0);
  EXPECT_TPCA_ERROR(decode_tensor(bytes), Errc::TrailingBytes);
}

TEST(TensorFile, MissingFile) {
  TempDir dir;
  EXPECT_TPCA_ERROR(read_tensor(dir / "absent.ten3"), Errc::IoError);
  EXPECT_TPCA_ERROR(write_tensor(dir / "no" / "such" / "dir.ten3", Tensor3()), Errc::IoError);
}

TEST(Frames, StackIntoFrontalSlices) {
  FrameSequence seq;
  seq.frames.push_back(Frame{2, 2, {0, 255, 255, 0}});
  seq.frames.push_back(Frame{2, 2, {10, 20, 30, 40}});
  const Tensor3 unit = frames_to_tensor(seq, Normalize::Unit);
  ASSERT_EQ(unit.shape(), (Shape3{2, 2, 2}));
  EXPECT_EQ(unit(0, 0, 0), 0.0);
  EXPECT_EQ(unit(0, 1, 0), 1.0);
  EXPECT_EQ(unit(1, 0, 0), 1.0);
  EXPECT_EQ(unit(1, 1, 0), 0.0);
  const Tensor3 raw = frames_to_tensor(seq, Normalize::None);
  EXPECT_EQ(raw(0, 1, 1), 20.0);
  EXPECT_EQ(raw(1, 0, 1), 30.0);
}

TEST(Frames, VideoSizedStack) {
  FrameSequence seq;
  for (int k = 0; k < 20; ++k) seq.frames.push_back(Frame{144, 176, std::vector<std::uint16_t>(144 * 176, 7)});
  EXPECT_EQ(frames_to_tensor(seq, Normalize::Unit).shape(), (Shape3{144, 176, 20}));
}

TEST(Frames, SixteenBitUnitScale) {
  FrameSequence seq;
  seq.bit_depth = 16;
  seq.frames.push_back(Frame{1, 2, {65535, 0}});
  const Tensor3 t = frames_to_tensor(seq, Normalize::Unit);
  EXPECT_EQ(t(0, 0, 0), 1.0);
  EXPECT_EQ(t(0, 1, 0), 0.0);
}

TEST(Frames, Errors) {
  FrameSequence seq;
  EXPECT_TPCA_ERROR(frames_to_tensor(seq, Normalize::Unit), Errc::EmptySequence);
  seq.frames.push_back(Frame{2, 2, std::vector<std::uint16_t>(4)});
  seq.frames.push_back(Frame{3, 3, std::vector<std::uint16_t>(9)});
  EXPECT_TPCA_ERROR(frames_to_tensor(seq, Normalize::Unit), Errc::InconsistentDims);
}

TEST(Render, ClipRoundsHalfAwayFromZero) {
  Tensor3 half(Shape3{2, 2, 1});
  for (auto& v : half.data()) v = 0.5;
  const auto rendered = tensor_to_frames(half, Render::Clip);
  for (auto p : rendered.frames[0].pixels) EXPECT_EQ(p, 128);

  const Tensor3 out_of_range(Shape3{1, 2, 1}, {-0.3, 1.7});
  const auto f = tensor_to_frames(out_of_range, Render::Clip).frames[0];
  EXPECT_EQ(f.at(0, 0), 0);
  EXPECT_EQ(f.at(0, 1), 255);
}

TEST(Render, RescaleHitsEndpoints) {
  const Tensor3 a(Shape3{2, 2, 1}, {-1.0, 0.0, 1.0, 3.0});
  const auto f = tensor_to_frames(a, Render::Rescale).frames[0];
  EXPECT_EQ(f.at(0, 0), 0);
  EXPECT_EQ(f.at(1, 1), 255);
  EXPECT_EQ(f.at(1, 0), 64);  // 63.75 rounds up

  Tensor3 flat(Shape3{1, 1, 2});
  for (auto& v : flat.data()) v = 4.0;
  const auto flat_frames = tensor_to_frames(flat, Render::Rescale);
  for (const auto& fr : flat_frames.frames) EXPECT_EQ(fr.pixels[0], 0);
}

TEST(Render, EightBitRoundTripIsExact) {
  std::mt19937_64 rng(149);
  FrameSequence seq;
  for (int k = 0; k < 3; ++k) {
    Frame f{5, 7, std::vector<std::uint16_t>(35)};
    for (auto& p : f.pixels) p = static_cast<std::uint16_t>(rng() % 256);
    seq.frames.push_back(f);
  }
  const auto back = tensor_to_frames(frames_to_tensor(seq, Normalize::Unit), Render::Clip);
  ASSERT_EQ(back.frames.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(back.frames[k].pixels, seq.frames[k].pixels);
}

TEST(Pgm, EightAndSixteenBitRoundTrip) {
  const Frame f8{2, 3, {0, 1, 2, 253, 254, 255}};
  int depth = 0;
  EXPECT_EQ(decode_pgm(encode_pgm(f8, 8), &depth).pixels, f8.pixels);
  EXPECT_EQ(depth, 8);

  const Frame f16{1, 3, {0, 258, 65535}};
  const auto bytes = encode_pgm(f16, 16);
  EXPECT_EQ(bytes[bytes.size() - 4], 0x01);  // 258 big-endian
  EXPECT_EQ(bytes[bytes.size() - 3], 0x02);
  const Frame back = decode_pgm(bytes, &depth);
  EXPECT_EQ(back.rows, 1u);
  EXPECT_EQ(back.cols, 3u);
  EXPECT_EQ(back.pixels, f16.pixels);
  EXPECT_EQ(depth, 16);
}

TEST(Pgm, HeaderCommentsAndErrors) {
  const std::string text = "P5\n# made by hand\n2 1\n# max\n255\n";
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  bytes.push_back(9);
  bytes.push_back(200);
  const Frame f = decode_pgm(bytes);
  EXPECT_EQ(f.pixels, (std::vector<std::uint16_t>{9, 200}));

  auto extra = bytes;
  extra.push_back(0);
  EXPECT_TPCA_ERROR(decode_pgm(extra), Errc::TrailingBytes);
  auto shorter = bytes;
  shorter.pop_back();
  EXPECT_TPCA_ERROR(decode_pgm(shorter), Errc::TruncatedPayload);
  const std::string p2 = "P2\n1 1\n255\n0";
  EXPECT_TPCA_ERROR(decode_pgm(std::vector<std::uint8_t>(p2.begin(), p2.end())), Errc::BadMagic);
  const std::string odd = "P5\n1 1\n100\n0";
  EXPECT_TPCA_ERROR(decode_pgm(std::vector<std::uint8_t>(odd.begin(), odd.end())), Errc::BadHeader);
}

TEST(FrameDirectory, RoundTripInNameOrder) {
  TempDir dir;
  FrameSequence seq;
  for (std::uint16_t k = 0; k < 12; ++k) seq.frames.push_back(Frame{2, 2, {k, 1, 2, 3}});
  write_frame_directory(dir.path(), seq);
  const auto back = read_frame_directory(dir.path());
  ASSERT_EQ(back.frames.size(), 12u);
  for (std::uint16_t k = 0; k < 12; ++k) EXPECT_EQ(back.frames[k].pixels[0], k);
  EXPECT_EQ(back.bit_depth, 8);
}

TEST(FrameDirectory, EmptyDirectory) {
  TempDir dir;
  EXPECT_TPCA_ERROR(read_frame_directory(dir.path()), Errc::EmptySequence);
}

}  // namespace
}  // namespace tpca::io
