#include "sp/descent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sp/arith.hpp"

namespace sp {

u64 isqrt(u64 n) {
  if (n < 2) return n;
  // Newton from an over-estimate; division keeps everything exact.
  const int bits = 64 - __builtin_clzll(n);
  u64 x = 1ull << ((bits + 1) / 2);
  while (true) {
    const u64 y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x > n / x) --x;
  while (x + 1 <= n / (x + 1)) ++x;
  return x;
}

bool is_perfect_square(u64 n, u64* root) {
  const u64 r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

std::vector<QuarticCandidate> search_quartic(u64 z_max) {
  if (z_max < 1) throw ParseError("z_max must be >= 1");
  if (z_max >= 2) checked_pow(z_max, 4);  // reject overflowing ranges up front
  std::vector<QuarticCandidate> out;
  for (u64 z = 2; z <= z_max; ++z) {
    const u64 z4 = checked_pow(z, 4);
    for (u64 y = 1; y < z; ++y) {
      const u64 diff = z4 - checked_pow(y, 4);  // positive since y < z
      u64 x = 0;
      if (is_perfect_square(diff, &x)) out.push_back({x, y, z});
    }
  }
  return out;
}

namespace {

// One reduction of a claimed primitive solution z^4 - y^4 = x^2 to a strictly
// smaller one (the step classical infinite descent repeats forever, which is
// the contradiction). Reachable only from a genuine solution, so never taken;
// every identity along the way is still checked exactly.
DescentStep reduction_step(const QuarticCandidate& c) {
  if (std::gcd(c.y, c.z) != 1)
    throw std::logic_error("descent step requires gcd(y, z) = 1");
  const u64 y2 = checked_mul(c.y, c.y);
  const u64 z2 = checked_mul(c.z, c.z);
  // x^2 + (y^2)^2 = (z^2)^2 is a primitive Pythagorean triple.
  if (c.y % 2 == 1) {
    // Odd leg y^2 = m^2 - n^2, even leg x = 2mn, z^2 = m^2 + n^2; multiplying
    // the first and last gives (y z)^2 = m^4 - n^4.
    const Generators g = parametrize(y2, c.x, z2);
    const QuarticCandidate smaller{checked_mul(c.y, c.z), g.n, g.m};
    if (checked_pow(smaller.z, 4) !=
        checked_add(checked_pow(smaller.y, 4),
                    checked_mul(smaller.x, smaller.x)))
      throw std::logic_error("descent identity (yz)^2 = m^4 - n^4 failed");
    if (smaller.z >= c.z)
      throw std::logic_error("descent step did not shrink");
    return {smaller, "odd y: (yz)^2 = m^4 - n^4 from x^2 + (y^2)^2 = (z^2)^2"};
  }
  // Even leg y^2 = 2mn, odd leg x = m^2 - n^2, z^2 = m^2 + n^2. Now
  // (m, n, z) with m^2 + n^2 = z^2 is itself primitive, so one of m, n is
  // 2ab and the other a^2 - b^2 with z = a^2 + b^2, giving
  // (y/2)^2 = ab(a-b)(a+b) with the four factors pairwise coprime; each must
  // be a perfect square A^2, B^2, C^2, D^2, and A^4 - B^4 = (C D)^2.
  const Generators mn = parametrize(c.x, y2, z2);
  const Generators ab = parametrize(mn.m % 2 == 1 ? mn.m : mn.n,
                                    mn.m % 2 == 1 ? mn.n : mn.m, c.z);
  const u64 a = ab.m, b = ab.n;
  const u64 half = c.y / 2;
  if (checked_mul(half, half) !=
      checked_mul(checked_mul(a, b), checked_mul(a - b, a + b)))
    throw std::logic_error("descent identity (y/2)^2 = ab(a-b)(a+b) failed");
  u64 A = 0, B = 0, C = 0, D = 0;
  if (!is_perfect_square(a, &A) || !is_perfect_square(b, &B) ||
      !is_perfect_square(a - b, &C) || !is_perfect_square(checked_add(a, b), &D))
    throw std::logic_error("coprime factors of a square must be squares");
  const QuarticCandidate smaller{checked_mul(C, D), B, A};
  if (checked_pow(smaller.z, 4) !=
      checked_add(checked_pow(smaller.y, 4),
                  checked_mul(smaller.x, smaller.x)))
    throw std::logic_error("descent identity A^4 - B^4 = (CD)^2 failed");
  if (smaller.z >= c.z) throw std::logic_error("descent step did not shrink");
  return {smaller, "even y: A^4 - B^4 = (CD)^2 via (y/2)^2 = ab(a-b)(a+b)"};
}

}  // namespace

DescentReport descent_audit(const QuarticCandidate& candidate) {
  if (candidate.x < 1 || candidate.y < 1 || candidate.z < 1)
    throw ParseError("descent audit requires positive x, y, z");
  const u64 z4 = checked_pow(candidate.z, 4);
  const u64 y4 = checked_pow(candidate.y, 4);
  const u64 x2 = checked_mul(candidate.x, candidate.x);

  DescentReport report;
  report.candidate = candidate;
  report.residual = static_cast<__int128>(z4) - static_cast<__int128>(y4) -
                    static_cast<__int128>(x2);
  report.satisfies_equation = (report.residual == 0);

  // Divide out g = gcd(y, z): a solution drops to (x/g^2, y/g, z/g) since
  // g^4 divides x^2. For non-solutions where g^2 does not divide x, the
  // candidate is reported unreduced.
  report.gcd_reduction = candidate;
  const u64 g = std::gcd(candidate.y, candidate.z);
  if (g > 1 && candidate.x % (g * g) == 0)
    report.gcd_reduction = {candidate.x / (g * g), candidate.y / g,
                            candidate.z / g};

  if (report.satisfies_equation) {
    report.failed_condition = QuarticFailure::None;
    report.step = reduction_step(report.gcd_reduction);
  } else {
    report.failed_condition = QuarticFailure::NotASolution;
  }
  return report;
}

std::vector<PythTriple> primitive_triples(u64 r_max) {
  if (r_max < 1) throw ParseError("r_max must be >= 1");
  std::vector<PythTriple> out;
  const u64 m_max = isqrt(r_max);
  for (u64 m = 2; m <= m_max; ++m) {
    for (u64 n = 1; n < m; ++n) {
      const u64 r = checked_add(checked_mul(m, m), checked_mul(n, n));
      if (r > r_max) break;
      if ((m - n) % 2 != 1 || std::gcd(m, n) != 1) continue;
      u64 p = m * m - n * n;
      u64 q = 2 * m * n;
      if (p > q) std::swap(p, q);
      out.push_back({p, q, r, true, m, n});
    }
  }
  std::sort(out.begin(), out.end(), [](const PythTriple& s, const PythTriple& t) {
    return s.r != t.r ? s.r < t.r : s.p < t.p;
  });
  return out;
}

Generators parametrize(u64 p, u64 q, u64 r) {
  if (p < 1 || q < 1 || r < 1)
    throw NotATripleError("legs and hypotenuse must be positive");
  if (checked_add(checked_mul(p, p), checked_mul(q, q)) != checked_mul(r, r))
    throw NotATripleError("p^2 + q^2 = r^2 fails for (" + std::to_string(p) +
                          "," + std::to_string(q) + "," + std::to_string(r) +
                          ")");
  if (std::gcd(p, q) != 1)
    throw NotPrimitiveError("gcd(p, q) = " + std::to_string(std::gcd(p, q)) +
                            " > 1");
  // A primitive triple has exactly one even leg; order so q is even. (Both
  // legs odd would make r^2 = 2 mod 4, impossible, so the sum check above
  // already rules it out; both even is caught by the gcd check.)
  if (p % 2 == 0) std::swap(p, q);
  u64 m = 0, n = 0;
  if (!is_perfect_square((r + p) / 2, &m) || !is_perfect_square((r - p) / 2, &n))
    throw NotPrimitiveError("triple is not generated by any (m, n)");
  if (!(m > n && n >= 1 && std::gcd(m, n) == 1 && (m - n) % 2 == 1 &&
        checked_mul(2, checked_mul(m, n)) == q))
    throw NotPrimitiveError("generator reconstruction failed");
  return {m, n};
}

}  // namespace sp
