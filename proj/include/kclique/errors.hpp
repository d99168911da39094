#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kclique {

// Text input that cannot be parsed as an edge list.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Binary cache file with bad magic, version, or truncated payload.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A counter or model value exceeded the 64-bit range. partial_progress
// tells the caller whether any per-worker results had been produced
// before the overflow was detected.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what, bool partial_progress = false)
      : std::runtime_error(what), partial_progress_(partial_progress) {}
  bool partial_progress() const { return partial_progress_; }

 private:
  bool partial_progress_;
};

// Input too large for an intentionally small-scale routine.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kclique
