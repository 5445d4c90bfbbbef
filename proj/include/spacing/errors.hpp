#pragma once

#include <stdexcept>
#include <string>

namespace spacing {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments, domain violations, malformed or non-conforming input.
// The CLI maps these to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the file name and 1-based line number when
// known so messages can point at the offending row.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& file, long line, const std::string& what)
      : UsageError(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}
  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

// Numerical degeneracy in otherwise well-formed input (zero column, unit
// correlation, vanishing variance estimate). The CLI maps these to exit 3.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what, long index = -1)
      : Error(what), index_(index) {}
  // Offending column/entry when the failure is tied to one, else -1.
  long index() const { return index_; }

 private:
  long index_;
};

}  // namespace spacing
