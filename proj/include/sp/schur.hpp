#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "sp/errors.hpp"

namespace sp {

// Strong: triples a + b = c with a <= b (classical Schur).
// Weak:   triples a + b = c with a <  b (distinct summands).
enum class TripleMode { Strong, Weak };

const char* to_string(TripleMode mode);
TripleMode mode_from_string(std::string_view name);

/// A total coloring of [1, n] with palette [0, t).
class Coloring {
 public:
  // colors[i] is the color of integer i+1; every entry must lie in [0, t).
  Coloring(int t, std::vector<int> colors);

  int t() const { return t_; }
  u64 n() const { return colors_.size(); }
  int color_of(u64 x) const;  // x in [1, n]
  const std::vector<int>& colors() const { return colors_; }

 private:
  int t_;
  std::vector<int> colors_;
};

/// A witness a + b = c, all three of one color under the source coloring.
struct SchurTriple {
  u64 a = 0;
  u64 b = 0;
  u64 c = 0;
  int color = 0;
  TripleMode mode = TripleMode::Strong;
};

// Lexicographically smallest (c, a) monochromatic triple in [1, n], if any.
std::optional<SchurTriple> find_monochromatic_triple(const Coloring& coloring,
                                                     TripleMode mode);

// True iff the coloring contains no monochromatic triple for the mode.
bool is_admissible(const Coloring& coloring, TripleMode mode);

// Branching order over candidate colors in the backtracking search. Either
// order explores the same canonical space and must report the same S.
enum class BranchOrder { ColorAscending, ColorDescending };

/// Exact Schur threshold: S is the largest n admitting an admissible
/// t-coloring, the witness realizes it, and searched_through = S + 1 was
/// refuted by complete backtracking.
struct SchurCertificate {
  int t;
  TripleMode mode;
  u64 s_value;
  Coloring witness;
  u64 searched_through;
};

// Complete backtracking with symmetry breaking: integer 1 gets color 0 and
// color j+1 may appear only after color j. Throws CapExceededError when
// [1, cap] itself admits an admissible coloring.
SchurCertificate schur_number(int t, TripleMode mode, u64 cap = 63,
                              BranchOrder order = BranchOrder::ColorAscending);

// Thresholds certified by this project's own search (regression-tested
// against fresh schur_number runs). Strong t <= 4 and weak t <= 3; anything
// beyond is out of desk-scale reach here and returns nullopt.
std::optional<u64> certified_schur_number(int t, TripleMode mode);

// Certified threshold + 1: a horizon at which any total coloring must show a
// monochromatic triple.
std::optional<u64> default_selector_cap(int t, TripleMode mode);

using ColorFn = std::function<int(u64)>;

// Named selector rules shared by the CLI and the certificate verifier:
// "const" (everything color 0), "parity" (x mod 2), "mod<k>" (x mod k).
// Whether the values fit the palette is checked where the rule is applied.
ColorFn selector_rule(const std::string& name);

// Materializes the coloring on growing prefixes and returns the first
// (lexicographically smallest) monochromatic triple. Without an explicit cap
// the certified default is used; if none exists the cap must be supplied.
// Throws HorizonExhaustedError when [1, cap] shows no triple.
SchurTriple guaranteed_triple(const ColorFn& color_fn, int t, TripleMode mode,
                              std::optional<u64> cap = std::nullopt);

}  // namespace sp
