#pragma once

#include <stdexcept>
#include <string>

namespace emanet {

// Failure categories surfaced to callers and mapped to CLI exit codes.
enum class Errc {
  DuplicatePoint,
  DuplicateId,
  ModeUnsupported,
  DegenerateInput,
  ParseError,
  EmptyGraph,
  InvalidConfig,
  IoError,
  InternalInvariant,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Error(Errc code, const std::string& msg, long line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), code_(code), line_(line) {}

  Errc code() const { return code_; }
  long line() const { return line_; }  // -1 when not a parse failure

private:
  Errc code_;
  long line_ = -1;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }
[[noreturn]] inline void fail_at(Errc code, const std::string& msg, long line) { throw Error(code, msg, line); }

}  // namespace emanet
