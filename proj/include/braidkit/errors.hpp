#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidkit {

// Malformed braid-word text. position is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Handle reduction ran past its step budget. Not a verdict on the input.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("handle reduction exceeded step budget of " +
                           std::to_string(budget)),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

private:
  std::size_t budget_;
};

class InexactDivision : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A site does not match the pierce pattern, or sites overlap.
class PatternMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class CertificateFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidkit
