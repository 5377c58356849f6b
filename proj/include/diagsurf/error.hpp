#pragma once

#include <stdexcept>
#include <string>

namespace diagsurf {

enum class ErrorKind {
  NotPrime,
  SizeExceeded,
  NotADivisor,
  ZeroToNonpositive,
  BadParams,
  InexactDivision,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Configurable size bounds. Every enumerating routine checks its bound
// before allocating and throws SizeExceeded when it would be crossed.
struct Limits {
  unsigned long max_field = 1ul << 20;       // field elements
  unsigned long max_profile_field = 4096;    // value_profile convolution
  unsigned long max_naive = 1ul << 26;       // tuples in naive_count
  unsigned long max_scan = 1ul << 22;        // points of P^s in a scan
  unsigned long max_codewords = 1ul << 24;   // q^rank in weight enumeration
};

}  // namespace diagsurf
