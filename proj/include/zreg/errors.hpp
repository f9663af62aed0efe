#pragma once

#include <stdexcept>
#include <string>

namespace zreg {

// Argument outside an operation's region of validity: poles, vanishing
// Euler factors, degenerate denominators. The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested size exceeds a configured cap (sieve bound, polynomial degree).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A table invariant does not hold: non-monotone primes, a zero table that
// does not start near the first ordinate, an exact division with remainder.
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable, unwritable or corrupt persisted data. CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zreg
