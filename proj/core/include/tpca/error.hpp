#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpca {

enum class Errc {
  InvalidArgument,
  ShapeMismatch,
  IndexOutOfRange,
  SymmetryViolation,
  NumericalFailure,
  ZeroTensor,
  DescriptorMismatch,
  IoError,
  BadMagic,
  BadVersion,
  TruncatedPayload,
  TrailingBytes,
  BadHeader,
  InconsistentDims,
  EmptySequence,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it (e.g. to process exit codes) without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tpca
