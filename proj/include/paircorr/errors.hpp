#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace paircorr {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested dimension or variant has no implementation (e.g. closed forms
// exist only for n = 2, 3).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed its configured point/pair budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t estimated)
      : std::runtime_error(what), estimated_(estimated) {}

  std::uint64_t estimated() const noexcept { return estimated_; }

 private:
  std::uint64_t estimated_;
};

}  // namespace paircorr
