#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nodalcodes {

/// Malformed or inconsistent input data (bad files, mixed fields, duplicate points).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (odd branch degree, zero word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A hard enumeration or size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public DataError {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : DataError("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class HomogeneityError : public DataError {
 public:
  HomogeneityError(int first_degree, int second_degree)
      : DataError("polynomial is not homogeneous: found terms of degree " +
                  std::to_string(first_degree) + " and " + std::to_string(second_degree)),
        first_(first_degree),
        second_(second_degree) {}

  int first_degree() const noexcept { return first_; }
  int second_degree() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

/// Reduction modulo p is undefined because p divides a denominator; retry with another prime.
class ModulusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values that contradict a structural identity (e.g. defect larger than code dimension).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nodalcodes
