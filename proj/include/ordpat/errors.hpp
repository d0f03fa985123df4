#pragma once

#include <stdexcept>
#include <string>

namespace ordpat {

enum class Errc {
  CycleDetected,
  UnknownElement,
  SpaceMismatch,
  InfiniteIdeal,
  UnsupportedCapability,
  CapExceeded,
  NotAStructure,
  UndefinedForSpace,
  ParseError,
  UnknownFixture,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ordpat
