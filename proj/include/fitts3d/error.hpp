#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fitts3d {

// Base of every error the library raises. Callers that only care about
// "something in the model pipeline failed" can catch this one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An index-of-difficulty formula was evaluated outside its domain.
class DomainError : public Error {
public:
  using Error::Error;
};

class RankDeficient : public Error {
public:
  using Error::Error;
};

class InsufficientData : public Error {
public:
  using Error::Error;
};

// Total sum of squares is zero, so r² is undefined.
class DegenerateVariance : public Error {
public:
  using Error::Error;
};

class InvalidNesting : public Error {
public:
  using Error::Error;
};

// A task condition has no successful trial left after error exclusion.
class EmptyCondition : public Error {
public:
  using Error::Error;
};

// Planted ground truth predicts a non-positive movement time somewhere.
class InvalidTruth : public Error {
public:
  using Error::Error;
};

class DegenerateBone : public Error {
public:
  using Error::Error;
};

class SchemaError : public Error {
public:
  using Error::Error;
};

struct ParseIssue {
  std::size_t line = 0;   // 1-based, header is line 1
  std::size_t column = 0; // 1-based field index, 0 when the whole row is bad
  std::string reason;
};

// Raised by the trial-log reader. Carries every malformed row, not just the first.
class ParseError : public Error {
public:
  explicit ParseError(std::vector<ParseIssue> issues);

  const std::vector<ParseIssue>& issues() const noexcept { return issues_; }
  std::size_t line() const noexcept { return issues_.empty() ? 0 : issues_.front().line; }
  std::size_t column() const noexcept { return issues_.empty() ? 0 : issues_.front().column; }

private:
  std::vector<ParseIssue> issues_;
};

} // namespace fitts3d
