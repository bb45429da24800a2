#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mshydro {

/// Argument outside the mathematical domain of an operation (e.g. lambda02 >= 0, k <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independently computed routes disagree beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalue branches cannot be told apart between neighbouring wavenumbers.
class BranchCollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that a routine is not designed to handle (e.g. multi-mode data for a single-mode experiment).
class UnsupportedInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mshydro
