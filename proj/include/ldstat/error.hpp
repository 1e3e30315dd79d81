#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldstat {

/// Malformed Turtle, rule or description input. Carries a 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A rule whose head mentions a variable absent from its body, or a blank node.
class UnsafeRuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is recognised but deliberately not handled (RIF rule sources).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statistic that is undefined for its input, e.g. a ratio over an empty graph.
class StatsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A locator that the resolver could not turn into content.
class ResolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed Turtle document that does not have the shape of a statistics description.
class DescriptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ldstat
