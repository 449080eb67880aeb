#include "sp/schur.hpp"

#include <algorithm>
#include <string>

namespace sp {

const char* to_string(TripleMode mode) {
  return mode == TripleMode::Strong ? "strong" : "weak";
}

TripleMode mode_from_string(std::string_view name) {
  if (name == "strong") return TripleMode::Strong;
  if (name == "weak") return TripleMode::Weak;
  throw ParseError("unknown mode: expected \"strong\" or \"weak\"");
}

Coloring::Coloring(int t, std::vector<int> colors)
    : t_(t), colors_(std::move(colors)) {
  if (t_ < 1) throw ParseError("palette size must be >= 1");
  if (colors_.empty()) throw ParseError("coloring must cover [1, n] with n >= 1");
  for (int c : colors_) {
    if (c < 0 || c >= t_)
      throw ParseError("color " + std::to_string(c) + " outside palette [0," +
                       std::to_string(t_) + ")");
  }
}

int Coloring::color_of(u64 x) const {
  if (x < 1 || x > colors_.size())
    throw ParseError("integer " + std::to_string(x) +
                     " outside colored interval [1," +
                     std::to_string(colors_.size()) + "]");
  return colors_[x - 1];
}

std::optional<SchurTriple> find_monochromatic_triple(const Coloring& coloring,
                                                     TripleMode mode) {
  const u64 n = coloring.n();
  for (u64 c = 2; c <= n; ++c) {
    const int col = coloring.color_of(c);
    // a runs below b = c - a; strong admits a = b, weak does not.
    const u64 a_max = (mode == TripleMode::Strong) ? c / 2 : (c - 1) / 2;
    for (u64 a = 1; a <= a_max; ++a) {
      if (coloring.color_of(a) == col && coloring.color_of(c - a) == col)
        return SchurTriple{a, c - a, c, col, mode};
    }
  }
  return std::nullopt;
}

bool is_admissible(const Coloring& coloring, TripleMode mode) {
  return !find_monochromatic_triple(coloring, mode).has_value();
}

namespace {

// Backtracking over colorings of [1, cap], one integer at a time. Per color,
// fwd_ keeps bit a set iff a has that color and rev_ keeps the mirrored bit
// nbits-1-a, so "is there an a of color c with x-a also of color c" is a
// shifted AND of two bitsets.
class Searcher {
 public:
  Searcher(int t, TripleMode mode, u64 cap, BranchOrder order)
      : t_(t),
        mode_(mode),
        cap_(cap),
        order_(order),
        words_((cap + 64) / 64),
        nbits_(words_ * 64),
        fwd_(static_cast<std::size_t>(t), std::vector<u64>(words_, 0)),
        rev_(static_cast<std::size_t>(t), std::vector<u64>(words_, 0)) {}

  SchurCertificate run() {
    std::vector<int> assigned(cap_ + 2, -1);  // color of each integer, 1-based
    std::vector<int> next(cap_ + 2, 0);       // next branch index per depth
    std::vector<int> used(cap_ + 2, 0);       // palette prefix in use per depth
    std::vector<int> best_colors;
    u64 best = 0;
    u64 x = 1;
    while (true) {
      const int limit = std::min(t_ - 1, used[x]);  // highest candidate color
      int chosen = -1;
      while (next[x] <= limit) {
        const int cand = (order_ == BranchOrder::ColorAscending)
                             ? next[x]
                             : limit - next[x];
        ++next[x];
        if (!conflict(cand, x)) {
          chosen = cand;
          break;
        }
      }
      if (chosen < 0) {
        if (x == 1) break;  // whole tree exhausted
        --x;
        clear(assigned[x], x);
        continue;
      }
      set(chosen, x);
      assigned[x] = chosen;
      if (x > best) {
        best = x;
        best_colors.assign(assigned.begin() + 1, assigned.begin() + 1 + x);
      }
      if (x == cap_) throw CapExceededError(cap_);
      ++x;
      next[x] = 0;
      used[x] = std::max(used[x - 1], chosen + 1);
    }
    return SchurCertificate{t_, mode_, best, Coloring(t_, best_colors),
                            best + 1};
  }

 private:
  // Would coloring x with c close a monochromatic a + (x-a) = x?
  bool conflict(int c, u64 x) const {
    const u64 s = nbits_ - 1 - x;
    const std::size_t ws = s / 64;
    const unsigned bs = static_cast<unsigned>(s % 64);
    const std::vector<u64>& F = fwd_[c];
    const std::vector<u64>& R = rev_[c];
    const std::size_t last = (x - 1) / 64;
    for (std::size_t i = 0; i <= last; ++i) {
      u64 r = 0;
      if (i + ws < words_) {
        r = R[i + ws] >> bs;
        if (bs != 0 && i + ws + 1 < words_) r |= R[i + ws + 1] << (64 - bs);
      }
      u64 hit = F[i] & r;  // bit b set iff b and x-b both carry color c
      if (mode_ == TripleMode::Weak && (x & 1) == 0 && (x / 2) / 64 == i)
        hit &= ~(1ull << ((x / 2) % 64));  // weak mode forbids a = b only
      if (hit) return true;
    }
    return false;
  }

  void set(int c, u64 a) {
    fwd_[c][a / 64] |= 1ull << (a % 64);
    const u64 p = nbits_ - 1 - a;
    rev_[c][p / 64] |= 1ull << (p % 64);
  }

  void clear(int c, u64 a) {
    fwd_[c][a / 64] &= ~(1ull << (a % 64));
    const u64 p = nbits_ - 1 - a;
    rev_[c][p / 64] &= ~(1ull << (p % 64));
  }

  int t_;
  TripleMode mode_;
  u64 cap_;
  BranchOrder order_;
  std::size_t words_;
  u64 nbits_;
  std::vector<std::vector<u64>> fwd_;
  std::vector<std::vector<u64>> rev_;
};

}  // namespace

SchurCertificate schur_number(int t, TripleMode mode, u64 cap,
                              BranchOrder order) {
  if (t < 1) throw ParseError("palette size must be >= 1");
  if (cap < 1) throw ParseError("cap must be >= 1");
  if (cap > 1000000) throw ParseError("cap beyond 10^6 is not searchable here");
  return Searcher(t, mode, cap, order).run();
}

std::optional<u64> certified_schur_number(int t, TripleMode mode) {
  // Thresholds this artifact has itself computed and keeps under regression
  // (see the Schur-number tests). Nothing here is imported from elsewhere.
  if (mode == TripleMode::Strong) {
    switch (t) {
      case 1: return 1;
      case 2: return 4;
      case 3: return 13;
      case 4: return 44;
      default: return std::nullopt;
    }
  }
  switch (t) {
    case 1: return 2;
    case 2: return 8;
    case 3: return 23;
    default: return std::nullopt;  // weak t=4 is beyond desk-scale search
  }
}

std::optional<u64> default_selector_cap(int t, TripleMode mode) {
  if (auto s = certified_schur_number(t, mode)) return *s + 1;
  return std::nullopt;
}

ColorFn selector_rule(const std::string& name) {
  if (name == "const") return [](u64) { return 0; };
  if (name == "parity") return [](u64 x) { return static_cast<int>(x % 2); };
  if (name.size() > 3 && name.compare(0, 3, "mod") == 0) {
    u64 k = 0;
    for (std::size_t i = 3; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9')
        throw ParseError("bad rule \"" + name + "\": expected mod<k>");
      k = k * 10 + static_cast<u64>(name[i] - '0');
      if (k > 1000000) throw ParseError("rule modulus too large");
    }
    if (k < 1) throw ParseError("rule modulus must be >= 1");
    return [k](u64 x) { return static_cast<int>(x % k); };
  }
  throw ParseError("unknown rule \"" + name +
                   "\": expected const, parity, or mod<k>");
}

SchurTriple guaranteed_triple(const ColorFn& color_fn, int t, TripleMode mode,
                              std::optional<u64> cap) {
  if (t < 1) throw ParseError("palette size must be >= 1");
  u64 horizon;
  if (cap.has_value()) {
    horizon = *cap;
  } else if (auto d = default_selector_cap(t, mode)) {
    horizon = *d;
  } else {
    throw ParseError(
        "no certified default cap for this palette/mode; pass one explicitly");
  }
  if (horizon < 1) throw ParseError("cap must be >= 1");

  std::vector<int> col(horizon + 1, 0);
  for (u64 x = 1; x <= horizon; ++x) {
    const int cx = color_fn(x);
    if (cx < 0 || cx >= t)
      throw ParseError("color function returned " + std::to_string(cx) +
                       " outside palette [0," + std::to_string(t) + ") at x=" +
                       std::to_string(x));
    col[x] = cx;
    const u64 a_max = (mode == TripleMode::Strong) ? x / 2 : (x - 1) / 2;
    for (u64 a = 1; a <= a_max; ++a) {
      if (col[a] == cx && col[x - a] == cx)
        return SchurTriple{a, x - a, x, cx, mode};
    }
  }
  throw HorizonExhaustedError(horizon);
}

}  // namespace sp
