#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sp/errors.hpp"

namespace sp {

// Overflow-checked helpers; throw OverflowError instead of wrapping.
u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, u32 exp);

// Deterministic Miller-Rabin, valid over the whole 64-bit range.
bool is_prime_u64(u64 n);

/// An ordered finite set of distinct primes p_1 < p_2 < ... < p_k, treated by
/// the pipeline as if it were the complete list of primes.
class PrimeBasis {
 public:
  // Validates: k >= 1, strictly ascending, every element passes the
  // deterministic primality check.
  explicit PrimeBasis(std::vector<u64> primes);

  const std::vector<u64>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  u64 prime(std::size_t i) const { return primes_.at(i); }
  bool contains(u64 p) const;

  // Product of p_i^3; every mantissa divides this.
  u64 mantissa_modulus() const;

 private:
  std::vector<u64> primes_;
};

/// Exponents e_i paired positionally with the basis primes, ascending order.
using ExponentVector = std::vector<u32>;

struct FactorResult {
  bool smooth = false;
  ExponentVector exponents;  // exponents of the basis primes divided out
  u64 cofactor = 1;          // > 1 exactly when not smooth
};

// Trial division by the basis primes only; total for m >= 1, never throws
// for non-smooth input.
FactorResult try_factor_over_basis(u64 m, const PrimeBasis& basis);

// Same, but signals NotSmoothError (carrying the cofactor) when a prime
// factor lies outside the basis.
ExponentVector factor_over_basis(u64 m, const PrimeBasis& basis);

/// The fourth-power split m = u^4 * mantissa over the basis, with
/// u = prod p_i^{q_i}, mantissa = prod p_i^{r_i} and residues r_i in [0, 4).
struct MantissaDecomposition {
  u64 m = 1;
  u64 u = 1;
  u64 mantissa = 1;
  std::vector<u32> quotients;  // q_i = e_i div 4
  std::vector<u32> residues;   // r_i = e_i mod 4
};

MantissaDecomposition decompose(u64 m, const PrimeBasis& basis);

// Pigeon-hole label of a residue vector: base-4 mixed radix, least
// significant digit at the smallest prime. Bijective onto [0, 4^k).
u64 mantissa_index(std::span<const u32> residues);
std::vector<u32> residues_from_index(u64 index, std::size_t k);

// All basis-smooth integers in [1, bound], ascending, no duplicates.
std::vector<u64> smooth_numbers(const PrimeBasis& basis, u64 bound);

}  // namespace sp
