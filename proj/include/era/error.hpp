#pragma once

#include <stdexcept>
#include <string>

namespace era {

enum class Errc {
  DuplicateKey,
  UnknownClass,
  EmptyMap,
  EmptyInput,
  RaggedRows,
  UnmappedChar,
  LengthMismatch,
  TooShort,
  UnknownColumn,
  TooFewMetrics,
  DuplicateLabel,
  InvalidParams,
  UncategorizedMetric,
  NoLevels,
  BadFormat,
  IoFailure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace era
