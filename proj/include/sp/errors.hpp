#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// 64-bit arithmetic would wrap. Certificates are built from exact integer
// identities, so wrapping is never tolerated anywhere downstream.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `value` has a prime factor outside the basis. `cofactor` is what remains of
// `value` after dividing out every basis prime; its smallest prime factor is
// the out-of-basis witness.
class NotSmoothError : public std::runtime_error {
 public:
  NotSmoothError(u64 value, u64 cofactor)
      : std::runtime_error("not basis-smooth: " + std::to_string(value) +
                           " leaves cofactor " + std::to_string(cofactor)),
        value(value),
        cofactor(cofactor) {}
  u64 value;
  u64 cofactor;
};

// An admissible coloring of [1, cap] exists, so S >= cap and the exact Schur
// number is undetermined at this cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(u64 cap)
      : std::runtime_error("admissible coloring of [1," + std::to_string(cap) +
                           "] exists; Schur number undetermined at this cap"),
        cap(cap) {}
  u64 cap;
};

// The selector scanned [1, cap] without finding a monochromatic triple; the
// cap sits below the Schur threshold for this palette/mode.
class HorizonExhaustedError : public std::runtime_error {
 public:
  explicit HorizonExhaustedError(u64 cap)
      : std::runtime_error("no monochromatic triple within [1," +
                           std::to_string(cap) + "]; cap below Schur threshold"),
        cap(cap) {}
  u64 cap;
};

class NotATripleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimitiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SumMismatchError : public std::runtime_error {
 public:
  SumMismatchError(u64 a, u64 b, u64 c)
      : std::runtime_error("sum mismatch: " + std::to_string(a) + " + " +
                           std::to_string(b) + " != " + std::to_string(c)) {}
};

class MantissaMismatchError : public std::runtime_error {
 public:
  MantissaMismatchError(u64 da, u64 db, u64 dc)
      : std::runtime_error("mantissa mismatch: " + std::to_string(da) + ", " +
                           std::to_string(db) + ", " + std::to_string(dc)),
        mantissa_a(da),
        mantissa_b(db),
        mantissa_c(dc) {}
  u64 mantissa_a;
  u64 mantissa_b;
  u64 mantissa_c;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sp
