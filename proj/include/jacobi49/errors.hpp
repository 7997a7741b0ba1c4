#pragma once

#include <stdexcept>
#include <string>

namespace jacobi49 {

// Bad caller input: composite p, wrong residue class, non-primitive generator.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a partial function (index of 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mathematical invariant that must hold did not: signals a bug upstream
// or a convention mismatch, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A transform identity (Jacobi <-> cyclotomic) produced a non-integer result.
class IdentityViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Requested case exists mathematically but is not built (f odd, ...).
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jacobi49
