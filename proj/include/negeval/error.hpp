#ifndef NEGEVAL_ERROR_HPP
#define NEGEVAL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negeval {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the source name and the 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Gold and predicted corpora do not describe the same sentences.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments it does not accept.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A re-annotation patch could not be applied.
class PatchError : public Error {
 public:
  using Error::Error;
};

/// A negation dependency graph violates its invariants.
class GraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace negeval

#endif  // NEGEVAL_ERROR_HPP
