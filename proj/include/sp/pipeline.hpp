#pragma once

#include <optional>
#include <vector>

#include "sp/arith.hpp"
#include "sp/schur.hpp"

namespace sp {

/// The pigeonholing of integers by mantissa over a basis of k primes: a
/// partial coloring with palette 4^k, defined exactly on the basis-smooth
/// integers. Non-smooth integers are the crack in the finite-primes
/// assumption and surface as NotSmoothError / nullopt.
class MantissaColoring {
 public:
  explicit MantissaColoring(PrimeBasis basis);

  const PrimeBasis& basis() const { return basis_; }
  u64 palette_size() const { return palette_; }  // 4^k

  std::optional<u64> try_color(u64 m) const;  // nullopt when m is not smooth
  u64 color(u64 m) const;                     // throws NotSmoothError

 private:
  PrimeBasis basis_;
  u64 palette_;
};

// Pigeon-hole index of m, i.e. mantissa_index(decompose(m).residues).
u64 color_by_mantissa(u64 m, const PrimeBasis& basis);

/// The constructive content of the contradiction: the smallest integer that
/// is not basis-smooth. It is necessarily a prime outside the basis, and
/// everything below it is smooth.
struct EuclidWitness {
  PrimeBasis basis;
  u64 witness;
  u64 verified_smooth_below;  // every m in [1, witness) is basis-smooth
};

EuclidWitness euclid_witness(const PrimeBasis& basis);

/// A monochromatic same-mantissa smooth triple; finding one would refute the
/// quartic obstruction, so none is ever expected.
struct MantissaViolation {
  u64 a, b, c;
  u64 shared_mantissa;
};

struct TripleSweepReport {
  PrimeBasis basis;
  u64 bound;
  TripleMode mode;
  u64 smooth_count;      // basis-smooth integers in [1, bound]
  u64 triples_examined;  // smooth a (<|<=) b with a+b = c <= bound, c smooth
  std::vector<MantissaViolation> violations;
};

// Exhaustive sweep over all smooth triples a + b = c up to the bound,
// checking whether any shares one mantissa.
TripleSweepReport verify_no_mono_smooth_triple(const PrimeBasis& basis,
                                               u64 bound, TripleMode mode);

/// One verified line of the derivation chain, e.g. a = u(a)^4 * d. Both
/// sides are evaluated with checked arithmetic.
struct IdentityRecord {
  std::string name;
  u64 lhs;
  u64 rhs;
  bool holds;
};

IdentityRecord make_identity(std::string name, u64 lhs, u64 rhs);

/// The executable form of the derivation that a monochromatic same-mantissa
/// triple would force: a = u(a)^4 d, ..., u(a)^4 + u(b)^4 = u(c)^4,
/// u(c)^4 - u(b)^4 = (u(a)^2)^2. No genuine input satisfies the
/// preconditions; real invocations exit through the error paths.
struct ContradictionCertificate {
  u64 a, b, c;
  u64 shared_mantissa;      // d
  u64 u_a, u_b, u_c;        // the u-values of a, b, c
  std::vector<IdentityRecord> chain;
  bool fermat_check;        // u(a)^4 + u(b)^4 == u(c)^4
};

// Throws SumMismatchError, NotSmoothError (naming the offending argument via
// its value), or MantissaMismatchError.
ContradictionCertificate contradiction_certificate(u64 a, u64 b, u64 c,
                                                   const PrimeBasis& basis);

// Re-evaluates every identity in the chain with exact arithmetic.
bool certificate_identities_hold(const ContradictionCertificate& cert);

/// End-to-end demonstrator: the pigeonholing of [1, bound] fails at the
/// Euclid witness, and the colorable (smooth) part contains no monochromatic
/// same-mantissa triple either.
struct DemoReport {
  PrimeBasis basis;
  u64 bound;
  EuclidWitness witness;
  TripleSweepReport sweep;
};

DemoReport run_proof_demo(const PrimeBasis& basis, u64 bound,
                          TripleMode mode = TripleMode::Weak);

}  // namespace sp
