#pragma once

#include <optional>
#include <vector>

#include "sp/errors.hpp"

namespace sp {

// Exact floor square root and perfect-square test. Integer-only; no floating
// point touches any certificate path.
u64 isqrt(u64 n);
bool is_perfect_square(u64 n, u64* root = nullptr);

/// A claimed solution of z^4 - y^4 = x^2 in positive integers.
struct QuarticCandidate {
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;
  bool operator==(const QuarticCandidate&) const = default;
};

// Every (x, y, z) with 1 <= y < z <= z_max and z^4 - y^4 a positive perfect
// square x^2. Expected empty: the equation has no solutions in positive
// integers (Fermat's right-triangle theorem). Throws OverflowError when z^4
// would leave 64-bit range.
std::vector<QuarticCandidate> search_quartic(u64 z_max);

enum class QuarticFailure { None, NotASolution };

/// One reduction step of the classical infinite descent, reachable only from
/// a genuine solution (i.e. never in practice).
struct DescentStep {
  QuarticCandidate smaller;  // strictly smaller claimed solution
  std::string note;          // which reduction produced it
};

struct DescentReport {
  QuarticCandidate candidate;
  bool satisfies_equation = false;
  __int128 residual = 0;  // (z^4 - y^4) - x^2
  QuarticCandidate gcd_reduction;
  QuarticFailure failed_condition = QuarticFailure::NotASolution;
  std::optional<DescentStep> step;  // present only when residual == 0
};

DescentReport descent_audit(const QuarticCandidate& candidate);

/// p^2 + q^2 = r^2 with legs p <= q; primitive triples carry their
/// generators p = m^2 - n^2 (up to leg order), q = 2mn, r = m^2 + n^2.
struct PythTriple {
  u64 p = 0;
  u64 q = 0;
  u64 r = 0;
  bool primitive = false;
  u64 m = 0;
  u64 n = 0;
};

// All primitive triples with hypotenuse <= r_max, ascending by (r, p).
std::vector<PythTriple> primitive_triples(u64 r_max);

struct Generators {
  u64 m = 0;
  u64 n = 0;
  bool operator==(const Generators&) const = default;
};

// Inverse of the generator map for a primitive triple. Throws NotATripleError
// or NotPrimitiveError.
Generators parametrize(u64 p, u64 q, u64 r);

}  // namespace sp
