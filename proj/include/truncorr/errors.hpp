#pragma once

#include <stdexcept>
#include <string>

namespace truncorr {

// Malformed input: dimension mismatch, non-Hermitian matrix, bad state file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a function (negative nim
// argument, s-term with x > T, non-unit pure-state vector, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Eigensolver or SVD failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeds a configured capability guard (e.g. the partition
// enumeration limit of the G measure).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace truncorr
