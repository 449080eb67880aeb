#include "sp/arith.hpp"

#include <algorithm>
#include <string>

namespace sp {

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("addition overflows 64 bits: " + std::to_string(a) +
                        " + " + std::to_string(b));
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("multiplication overflows 64 bits: " +
                        std::to_string(a) + " * " + std::to_string(b));
  return r;
}

u64 checked_pow(u64 base, u32 exp) {
  u64 r = 1;
  while (exp > 0) {
    if (exp & 1) r = checked_mul(r, base);
    exp >>= 1;
    if (exp > 0) base = checked_mul(base, base);
  }
  return r;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every n < 2^64 (Sorenson–Webster).
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeBasis::PrimeBasis(std::vector<u64> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw ParseError("prime basis must not be empty");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0 && primes_[i] <= primes_[i - 1])
      throw ParseError("prime basis must be strictly ascending");
    if (!is_prime_u64(primes_[i]))
      throw ParseError("not prime: " + std::to_string(primes_[i]));
  }
}

bool PrimeBasis::contains(u64 p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

u64 PrimeBasis::mantissa_modulus() const {
  u64 m = 1;
  for (u64 p : primes_) m = checked_mul(m, checked_pow(p, 3));
  return m;
}

FactorResult try_factor_over_basis(u64 m, const PrimeBasis& basis) {
  if (m == 0) throw ParseError("cannot factor 0 over a prime basis");
  FactorResult res;
  res.exponents.assign(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const u64 p = basis.prime(i);
    while (m % p == 0) {
      m /= p;
      ++res.exponents[i];
    }
  }
  res.cofactor = m;
  res.smooth = (m == 1);
  return res;
}

ExponentVector factor_over_basis(u64 m, const PrimeBasis& basis) {
  FactorResult res = try_factor_over_basis(m, basis);
  if (!res.smooth) throw NotSmoothError(m, res.cofactor);
  return std::move(res.exponents);
}

MantissaDecomposition decompose(u64 m, const PrimeBasis& basis) {
  ExponentVector ev = factor_over_basis(m, basis);
  MantissaDecomposition d;
  d.m = m;
  d.quotients.resize(basis.size());
  d.residues.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const u32 e = ev[i];
    d.quotients[i] = e / 4;
    d.residues[i] = e % 4;
    d.u = checked_mul(d.u, checked_pow(basis.prime(i), d.quotients[i]));
    d.mantissa = checked_mul(d.mantissa, checked_pow(basis.prime(i), d.residues[i]));
  }
  return d;
}

u64 mantissa_index(std::span<const u32> residues) {
  if (residues.size() > 31)
    throw OverflowError("mantissa index exceeds 64 bits for k > 31");
  u64 idx = 0;
  for (std::size_t i = residues.size(); i-- > 0;) {
    if (residues[i] >= 4)
      throw ParseError("residue out of range [0,4): " +
                       std::to_string(residues[i]));
    idx = idx * 4 + residues[i];
  }
  return idx;
}

std::vector<u32> residues_from_index(u64 index, std::size_t k) {
  std::vector<u32> r(k);
  for (std::size_t i = 0; i < k; ++i) {
    r[i] = static_cast<u32>(index & 3);
    index >>= 2;
  }
  if (index != 0)
    throw ParseError("mantissa index out of range for basis size " +
                     std::to_string(k));
  return r;
}

std::vector<u64> smooth_numbers(const PrimeBasis& basis, u64 bound) {
  // Breadth by repeated multiplication: every smooth number <= bound is
  // reachable from 1 by multiplying basis primes without overflow.
  std::vector<u64> out;
  if (bound == 0) return out;
  out.push_back(1);
  // Generate p^a * (previously generated), one prime at a time; keeps the
  // list duplicate-free by construction.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const u64 p = basis.prime(i);
    const std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j) {
      u64 v = out[j];
      while (v <= bound / p) {
        v *= p;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sp
