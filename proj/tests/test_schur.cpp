#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sp/errors.hpp>
#include <sp/schur.hpp>

#include <random>

#include "oracles.hpp"

using namespace sp;

TEST_CASE("mode names round trip") {
  CHECK(std::string(to_string(TripleMode::Strong)) == "strong");
  CHECK(std::string(to_string(TripleMode::Weak)) == "weak");
  CHECK(mode_from_string("strong") == TripleMode::Strong);
  CHECK(mode_from_string("weak") == TripleMode::Weak);
  CHECK_THROWS_AS(mode_from_string("bold"), ParseError);
  CHECK_THROWS_AS(mode_from_string(""), ParseError);
}

TEST_CASE("coloring validation") {
  CHECK_THROWS_AS(Coloring(0, {0}), ParseError);
  CHECK_THROWS_AS(Coloring(2, {0, 2}), ParseError);
  CHECK_THROWS_AS(Coloring(2, {0, -1}), ParseError);

  const Coloring c(2, {0, 1, 1, 0});
  CHECK(c.t() == 2);
  CHECK(c.n() == 4);
  CHECK(c.color_of(1) == 0);
  CHECK(c.color_of(3) == 1);
  CHECK_THROWS_AS(c.color_of(0), ParseError);
  CHECK_THROWS_AS(c.color_of(5), ParseError);
}

TEST_CASE("triple finding on worked colorings") {
  // One color throughout: (1, 2, 3) is the first weak triple, (1, 1, 2) the
  // first strong one.
  const Coloring mono(1, {0, 0, 0});
  const auto weak = find_monochromatic_triple(mono, TripleMode::Weak);
  REQUIRE(weak.has_value());
  CHECK(weak->a == 1);
  CHECK(weak->b == 2);
  CHECK(weak->c == 3);
  CHECK(weak->color == 0);

  const auto strong = find_monochromatic_triple(mono, TripleMode::Strong);
  REQUIRE(strong.has_value());
  CHECK(strong->a == 1);
  CHECK(strong->b == 1);
  CHECK(strong->c == 2);

  // {1, 4} vs {2, 3} survives strong scrutiny on [1, 4].
  const Coloring split(2, {0, 1, 1, 0});
  CHECK_FALSE(find_monochromatic_triple(split, TripleMode::Strong));
  CHECK(is_admissible(split, TripleMode::Strong));

  // 2 + 2 = 4 breaks the same partition once 2 and 4 share a color.
  const Coloring clash(2, {0, 1, 0, 1});
  const auto hit = find_monochromatic_triple(clash, TripleMode::Strong);
  REQUIRE(hit.has_value());
  CHECK(hit->a == 2);
  CHECK(hit->b == 2);
  CHECK(hit->c == 4);
  CHECK(is_admissible(clash, TripleMode::Weak));
}

TEST_CASE("finder and admissibility agree with the naive scan") {
  std::mt19937 rng(90125);
  for (int round = 0; round < 10000; ++round) {
    const int t = 1 + int(rng() % 4);
    const u64 n = 1 + rng() % 30;
    std::vector<int> colors(n);
    for (auto& c : colors) c = int(rng() % t);
    const Coloring coloring(t, colors);
    for (const TripleMode mode : {TripleMode::Strong, TripleMode::Weak}) {
      const bool weak = mode == TripleMode::Weak;
      const auto found = find_monochromatic_triple(coloring, mode);
      CHECK(found.has_value() == oracle::has_mono_triple(colors, weak));
      CHECK(is_admissible(coloring, mode) == !found.has_value());
      if (found)
        CHECK(oracle::valid_triple(found->a, found->b, found->c, found->color,
                                   weak, colors));
    }
  }
}

TEST_CASE("strong thresholds for small palettes") {
  const SchurCertificate one = schur_number(1, TripleMode::Strong);
  CHECK(one.s_value == 1);
  CHECK(one.searched_through == 2);
  CHECK(one.witness.colors() == std::vector<int>{0});

  const SchurCertificate two = schur_number(2, TripleMode::Strong);
  CHECK(two.s_value == 4);
  CHECK(two.searched_through == 5);
  CHECK(two.witness.colors() == std::vector<int>{0, 1, 1, 0});

  const SchurCertificate three = schur_number(3, TripleMode::Strong);
  CHECK(three.s_value == 13);
  CHECK(three.searched_through == 14);
  CHECK(is_admissible(three.witness, TripleMode::Strong));
  CHECK(three.witness.colors()[0] == 0);
}

TEST_CASE("weak thresholds for small palettes") {
  CHECK(schur_number(1, TripleMode::Weak).s_value == 2);
  CHECK(schur_number(2, TripleMode::Weak).s_value == 8);

  const SchurCertificate three = schur_number(3, TripleMode::Weak);
  CHECK(three.s_value == 23);
  CHECK(three.searched_through == 24);
  CHECK(is_admissible(three.witness, TripleMode::Weak));
}

TEST_CASE("small thresholds match the unpruned enumeration") {
  CHECK(schur_number(1, TripleMode::Strong).s_value ==
        oracle::brute_schur(1, false, 10));
  CHECK(schur_number(2, TripleMode::Strong).s_value ==
        oracle::brute_schur(2, false, 10));
  CHECK(schur_number(1, TripleMode::Weak).s_value ==
        oracle::brute_schur(1, true, 10));
  CHECK(schur_number(2, TripleMode::Weak).s_value ==
        oracle::brute_schur(2, true, 12));
}

TEST_CASE("witnesses are admissible and maximal") {
  for (const TripleMode mode : {TripleMode::Strong, TripleMode::Weak}) {
    for (int t = 1; t <= 3; ++t) {
      const SchurCertificate cert = schur_number(t, mode);
      CHECK(cert.searched_through == cert.s_value + 1);
      CHECK(cert.witness.n() == cert.s_value);
      CHECK(is_admissible(cert.witness, mode));
      CHECK_FALSE(oracle::has_mono_triple(cert.witness.colors(),
                                          mode == TripleMode::Weak));
      // Certified values agree with the fresh search.
      CHECK(certified_schur_number(t, mode) == cert.s_value);
      // Any prefix of an admissible coloring stays admissible.
      std::vector<int> prefix(cert.witness.colors().begin(),
                              cert.witness.colors().end() - 1);
      if (!prefix.empty())
        CHECK(is_admissible(Coloring(t, prefix), mode));
    }
  }
  CHECK(certified_schur_number(4, TripleMode::Strong) == 44);
  CHECK_FALSE(certified_schur_number(4, TripleMode::Weak));
  CHECK_FALSE(certified_schur_number(5, TripleMode::Strong));
}

TEST_CASE("weak thresholds dominate strong ones") {
  for (int t = 1; t <= 3; ++t)
    CHECK(schur_number(t, TripleMode::Weak).s_value >=
          schur_number(t, TripleMode::Strong).s_value);
}

TEST_CASE("branch order does not change the threshold") {
  for (const TripleMode mode : {TripleMode::Strong, TripleMode::Weak}) {
    for (int t = 1; t <= 2; ++t) {
      const auto up = schur_number(t, mode, 63, BranchOrder::ColorAscending);
      const auto down = schur_number(t, mode, 63, BranchOrder::ColorDescending);
      CHECK(up.s_value == down.s_value);
      CHECK(is_admissible(down.witness, mode));
    }
  }
  CHECK(schur_number(3, TripleMode::Strong, 63, BranchOrder::ColorDescending)
            .s_value == 13);
}

TEST_CASE("searches are deterministic") {
  const SchurCertificate a = schur_number(3, TripleMode::Strong);
  const SchurCertificate b = schur_number(3, TripleMode::Strong);
  CHECK(a.witness.colors() == b.witness.colors());
  CHECK(a.s_value == b.s_value);
}

TEST_CASE("cap handling") {
  // [1, 3] splits cleanly into {1} and {2, 3}, so a cap of 3 is reachable.
  try {
    schur_number(2, TripleMode::Strong, 3);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.cap == 3);
  }
  // Caps below the known thresholds are reachable for every in-scope palette.
  CHECK_THROWS_AS(schur_number(3, TripleMode::Strong, 10), CapExceededError);
  CHECK_THROWS_AS(schur_number(4, TripleMode::Strong, 30), CapExceededError);
  CHECK_THROWS_AS(schur_number(3, TripleMode::Weak, 20), CapExceededError);
  CHECK_THROWS_AS(schur_number(1, TripleMode::Weak, 2), CapExceededError);

  CHECK_THROWS_AS(schur_number(0, TripleMode::Strong), ParseError);
  CHECK_THROWS_AS(schur_number(2, TripleMode::Strong, 0), ParseError);
  CHECK_THROWS_AS(schur_number(2, TripleMode::Strong, 2000000), ParseError);
}

TEST_CASE("selector rules by name") {
  const ColorFn c = selector_rule("const");
  CHECK(c(1) == 0);
  CHECK(c(17) == 0);

  const ColorFn p = selector_rule("parity");
  CHECK(p(1) == 1);
  CHECK(p(2) == 0);
  CHECK(p(4) == 0);

  const ColorFn m3 = selector_rule("mod3");
  CHECK(m3(3) == 0);
  CHECK(m3(4) == 1);
  CHECK(m3(6) == 0);

  CHECK_THROWS_AS(selector_rule("mod0"), ParseError);
  CHECK_THROWS_AS(selector_rule("mod"), ParseError);
  CHECK_THROWS_AS(selector_rule("modx"), ParseError);
  CHECK_THROWS_AS(selector_rule("random"), ParseError);
}

TEST_CASE("guaranteed triples on worked selectors") {
  // Constant coloring: first weak triple is 1 + 2 = 3.
  const SchurTriple t1 = guaranteed_triple(selector_rule("const"), 1,
                                           TripleMode::Weak);
  CHECK(t1.a == 1);
  CHECK(t1.b == 2);
  CHECK(t1.c == 3);
  CHECK(t1.color == 0);

  // Parity with two colors: 2 + 2 = 4, all even.
  const SchurTriple t2 = guaranteed_triple(selector_rule("parity"), 2,
                                           TripleMode::Strong);
  CHECK(t2.a == 2);
  CHECK(t2.b == 2);
  CHECK(t2.c == 4);
  CHECK(t2.color == 0);

  // Residues mod 3: 3 + 3 = 6, all divisible by 3.
  const SchurTriple t3 = guaranteed_triple(selector_rule("mod3"), 3,
                                           TripleMode::Strong);
  CHECK(t3.a == 3);
  CHECK(t3.b == 3);
  CHECK(t3.c == 6);
  CHECK(t3.color == 0);

  // 3 + 6 = 9 is the first weak triple inside one residue class mod 3.
  const SchurTriple t4 = guaranteed_triple(selector_rule("mod3"), 3,
                                           TripleMode::Weak);
  CHECK(t4.a == 3);
  CHECK(t4.b == 6);
  CHECK(t4.c == 9);
}

TEST_CASE("guaranteed triple error paths") {
  // No certified horizon for four colors in weak mode; an explicit cap works.
  CHECK_THROWS_AS(
      guaranteed_triple(selector_rule("parity"), 4, TripleMode::Weak),
      ParseError);
  const SchurTriple t = guaranteed_triple(selector_rule("parity"), 4,
                                          TripleMode::Weak, 100);
  CHECK(t.a == 2);
  CHECK(t.b == 4);
  CHECK(t.c == 6);

  // A cap of 2 leaves no room for any weak triple.
  try {
    guaranteed_triple(selector_rule("const"), 1, TripleMode::Weak, 2);
    FAIL("expected HorizonExhaustedError");
  } catch (const HorizonExhaustedError& e) {
    CHECK(e.cap == 2);
  }

  // Rule values must fit the palette.
  CHECK_THROWS_AS(
      guaranteed_triple(selector_rule("mod5"), 3, TripleMode::Strong, 20),
      ParseError);
  CHECK_THROWS_AS(guaranteed_triple(selector_rule("const"), 0,
                                    TripleMode::Strong, 10),
                  ParseError);
}
