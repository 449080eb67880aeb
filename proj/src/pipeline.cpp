#include "sp/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace sp {

MantissaColoring::MantissaColoring(PrimeBasis basis)
    : basis_(std::move(basis)),
      palette_(checked_pow(4, static_cast<u32>(basis_.size()))) {}

std::optional<u64> MantissaColoring::try_color(u64 m) const {
  const FactorResult f = try_factor_over_basis(m, basis_);
  if (!f.smooth) return std::nullopt;
  std::vector<u32> residues(f.exponents.size());
  for (std::size_t i = 0; i < residues.size(); ++i)
    residues[i] = f.exponents[i] % 4;
  return mantissa_index(residues);
}

u64 MantissaColoring::color(u64 m) const {
  const FactorResult f = try_factor_over_basis(m, basis_);
  if (!f.smooth) throw NotSmoothError(m, f.cofactor);
  std::vector<u32> residues(f.exponents.size());
  for (std::size_t i = 0; i < residues.size(); ++i)
    residues[i] = f.exponents[i] % 4;
  return mantissa_index(residues);
}

u64 color_by_mantissa(u64 m, const PrimeBasis& basis) {
  return MantissaColoring(basis).color(m);
}

EuclidWitness euclid_witness(const PrimeBasis& basis) {
  // Linear scan from 2; terminates at the smallest prime outside the basis
  // (a composite below it would have a smaller non-smooth factor).
  for (u64 m = 2;; ++m) {
    const FactorResult f = try_factor_over_basis(m, basis);
    if (f.smooth) continue;
    // First non-smooth integer: necessarily a prime outside the basis (a
    // composite would have a smaller non-smooth factor, contradicting
    // minimality). Both facts are re-verified here rather than trusted.
    if (!is_prime_u64(m) || basis.contains(m) || f.cofactor != m)
      throw std::logic_error("witness scan postcondition failed");
    return EuclidWitness{basis, m, m};
  }
}

TripleSweepReport verify_no_mono_smooth_triple(const PrimeBasis& basis,
                                               u64 bound, TripleMode mode) {
  if (bound < 3) throw ParseError("bound must be >= 3");
  TripleSweepReport report{basis, bound, mode, 0, 0, {}};

  const std::vector<u64> smooth = smooth_numbers(basis, bound);
  report.smooth_count = smooth.size();

  const MantissaColoring coloring(basis);
  std::unordered_map<u64, u64> color;
  color.reserve(smooth.size() * 2);
  for (u64 m : smooth) color.emplace(m, coloring.color(m));

  for (std::size_t i = 0; i < smooth.size(); ++i) {
    const u64 a = smooth[i];
    const std::size_t j0 = (mode == TripleMode::Strong) ? i : i + 1;
    for (std::size_t j = j0; j < smooth.size(); ++j) {
      const u64 b = smooth[j];
      if (a > bound - b) break;  // a + b > bound, and b only grows
      const u64 c = a + b;
      const auto it = color.find(c);
      if (it == color.end()) continue;  // c not smooth: triple leaves the grid
      ++report.triples_examined;
      const u64 ca = color.at(a);
      if (ca == color.at(b) && ca == it->second) {
        const MantissaDecomposition d = decompose(a, basis);
        report.violations.push_back({a, b, c, d.mantissa});
      }
    }
  }
  return report;
}

IdentityRecord make_identity(std::string name, u64 lhs, u64 rhs) {
  const bool holds = (lhs == rhs);
  return IdentityRecord{std::move(name), lhs, rhs, holds};
}

namespace {

std::vector<IdentityRecord> build_chain(u64 a, u64 b, u64 c, u64 d, u64 u_a,
                                        u64 u_b, u64 u_c) {
  const u64 ua4 = checked_pow(u_a, 4);
  const u64 ub4 = checked_pow(u_b, 4);
  const u64 uc4 = checked_pow(u_c, 4);
  const u64 ua2 = checked_mul(u_a, u_a);
  std::vector<IdentityRecord> chain;
  chain.push_back(make_identity("a = u(a)^4 d", a, checked_mul(ua4, d)));
  chain.push_back(make_identity("b = u(b)^4 d", b, checked_mul(ub4, d)));
  chain.push_back(make_identity("c = u(c)^4 d", c, checked_mul(uc4, d)));
  chain.push_back(make_identity(
      "u(a)^4 d + u(b)^4 d = u(c)^4 d",
      checked_add(checked_mul(ua4, d), checked_mul(ub4, d)),
      checked_mul(uc4, d)));
  chain.push_back(
      make_identity("u(a)^4 + u(b)^4 = u(c)^4", checked_add(ua4, ub4), uc4));
  chain.push_back(make_identity("u(c)^4 - u(b)^4 = (u(a)^2)^2",
                                checked_add(ub4, checked_mul(ua2, ua2)),
                                uc4));  // evaluated in added form, same content
  return chain;
}

}  // namespace

ContradictionCertificate contradiction_certificate(u64 a, u64 b, u64 c,
                                                   const PrimeBasis& basis) {
  if (a < 1 || b < 1) throw ParseError("a and b must be positive");
  if (a >= b) throw ParseError("requires a < b (distinct summands)");
  if (checked_add(a, b) != c) throw SumMismatchError(a, b, c);
  const MantissaDecomposition da = decompose(a, basis);
  const MantissaDecomposition db = decompose(b, basis);
  const MantissaDecomposition dc = decompose(c, basis);
  if (da.mantissa != db.mantissa || da.mantissa != dc.mantissa)
    throw MantissaMismatchError(da.mantissa, db.mantissa, dc.mantissa);

  ContradictionCertificate cert{a,     b,     c,    da.mantissa,
                                da.u,  db.u,  dc.u, {},
                                false};
  cert.chain = build_chain(a, b, c, cert.shared_mantissa, cert.u_a, cert.u_b,
                           cert.u_c);
  cert.fermat_check = cert.chain[4].holds;
  return cert;
}

bool certificate_identities_hold(const ContradictionCertificate& cert) {
  std::vector<IdentityRecord> fresh;
  try {
    fresh = build_chain(cert.a, cert.b, cert.c, cert.shared_mantissa, cert.u_a,
                        cert.u_b, cert.u_c);
  } catch (const OverflowError&) {
    return false;
  }
  if (fresh.size() != cert.chain.size()) return false;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const IdentityRecord& f = fresh[i];
    const IdentityRecord& g = cert.chain[i];
    if (f.name != g.name || f.lhs != g.lhs || f.rhs != g.rhs ||
        f.holds != g.holds || !f.holds)
      return false;
  }
  return true;
}

DemoReport run_proof_demo(const PrimeBasis& basis, u64 bound, TripleMode mode) {
  if (bound < 3) throw ParseError("bound must be >= 3");
  EuclidWitness witness = euclid_witness(basis);
  TripleSweepReport sweep = verify_no_mono_smooth_triple(basis, bound, mode);
  return DemoReport{basis, bound, std::move(witness), std::move(sweep)};
}

}  // namespace sp
