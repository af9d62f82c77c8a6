#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace choiceproc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Schema violations: undeclared attributes, value-kind mismatches,
/// incomparable values.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// Byte range into a source text. start <= end.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

/// Raised by the DSL parser. Carries the offending span and the token
/// classes that would have been accepted at that point.
class ParseError : public Error {
public:
  ParseError(std::string message, SourceSpan span, std::vector<std::string> expected)
      : Error(std::move(message)), span_(span), expected_(std::move(expected)) {}

  SourceSpan span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// Choosing the first element of an empty list.
class EmptyChoiceError : public Error {
public:
  using Error::Error;
};

/// Satisficing guard failure: no satisfactory element exists where one is
/// required.
class NoSatisfactoryElementError : public Error {
public:
  using Error::Error;
};

/// A simple-mode operation was handed a disjunctive filter.
class NotSimpleError : public Error {
public:
  using Error::Error;
};

/// An exhaustive enumeration or CNF expansion would exceed its configured
/// bound.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

}  // namespace choiceproc
