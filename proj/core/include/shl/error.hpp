#pragma once

#include <stdexcept>
#include <string>

namespace shl {

// Malformed or inconsistent input: bad JSON, unknown family, a generator set
// that is not closed, a form that is not invariant. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed the configured size ceiling. CLI exit code 3.
class CeilingError : public std::runtime_error {
 public:
  CeilingError(const std::string& what, std::size_t requested, std::size_t limit)
      : std::runtime_error(what), requested_(requested), limit_(limit) {}
  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

// An identity that must hold for every computed object failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shl
