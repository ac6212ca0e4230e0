#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cegis/error.hpp"
#include "cegis/families.hpp"
#include "cegis/language.hpp"
#include "cegis/pairing.hpp"
#include "cegis/trace.hpp"

using namespace cegis;

namespace {

// Codes assigned by walking the anti-diagonals a+b = s with b ascending,
// without using the closed form.
std::map<std::pair<Natural, Natural>, Natural> diagonal_walk(Natural max_sum) {
  std::map<std::pair<Natural, Natural>, Natural> codes;
  Natural next = 0;
  for (Natural s = 0; s <= max_sum; ++s) {
    for (Natural b = 0; b <= s; ++b) codes[{s - b, b}] = next++;
  }
  return codes;
}

}  // namespace

TEST(Pairing, SmallValues) {
  EXPECT_EQ(pair_encode(0, 0), 0u);
  EXPECT_EQ(pair_encode(1, 1), 4u);
  EXPECT_EQ(pair_encode(0, 1), 2u);
  EXPECT_EQ(pair_encode(1, 0), 1u);
}

TEST(Pairing, DecodeSmallValues) {
  EXPECT_EQ(pair_decode(0), (std::pair<Natural, Natural>(0, 0)));
  EXPECT_EQ(pair_decode(4), (std::pair<Natural, Natural>(1, 1)));
  EXPECT_EQ(pair_decode(7), (std::pair<Natural, Natural>(2, 1)));
}

TEST(Pairing, AgreesWithDiagonalWalk) {
  const auto codes = diagonal_walk(200);
  for (Natural a = 0; a <= 100; ++a) {
    for (Natural b = 0; b <= 100; ++b) {
      ASSERT_EQ(pair_encode(a, b), codes.at({a, b})) << a << "," << b;
    }
  }
}

TEST(Pairing, DecodeByScanningCodes) {
  // Invert by brute force over the walk for every code up to 10^4.
  std::map<Natural, std::pair<Natural, Natural>> inverse;
  for (const auto& [ab, code] : diagonal_walk(150)) inverse[code] = ab;
  for (Natural c = 0; c <= 10000; ++c) ASSERT_EQ(pair_decode(c), inverse.at(c)) << c;
}

TEST(Pairing, RoundTripsAndMonotone) {
  for (Natural c = 0; c <= 10000; ++c) {
    const auto [a, b] = pair_decode(c);
    ASSERT_EQ(pair_encode(a, b), c);
  }
  for (Natural a = 0; a <= 100; ++a) {
    for (Natural b = 0; b <= 100; ++b) {
      ASSERT_EQ(pair_decode(pair_encode(a, b)), std::pair(a, b));
      ASSERT_GT(pair_encode(a + 1, b), pair_encode(a, b));
      ASSERT_GT(pair_encode(a, b + 1), pair_encode(a, b));
    }
  }
  for (Natural a = 0; a <= 1000; ++a) ASSERT_GE(pair_encode(a, 0), a);
}

TEST(Pairing, LargeCodesDecodeExactly) {
  for (Natural a : {Natural{1} << 20, Natural{3037000000}, Natural{123456789}}) {
    for (Natural b : {Natural{0}, Natural{1}, Natural{99999}}) {
      EXPECT_EQ(pair_decode(pair_encode(a, b)), std::pair(a, b));
    }
  }
  const Natural max = ~Natural{0};
  const auto [a, b] = pair_decode(max);
  EXPECT_EQ(pair_encode(a, b), max);
}

TEST(Pairing, OverflowIsReported) {
  EXPECT_THROW(pair_encode(~Natural{0}, 1), InputTooLarge);
  EXPECT_THROW(pair_encode(Natural{1} << 33, Natural{1} << 33), InputTooLarge);
}

TEST(Zigzag, Sequence) {
  const std::int64_t values[] = {0, -1, 1, -2, 2, -3};
  for (Natural i = 0; i < 6; ++i) {
    EXPECT_EQ(zigzag_encode(values[i]), i);
    EXPECT_EQ(zigzag_decode(i), values[i]);
  }
  for (std::int64_t v = -1000; v <= 1000; ++v) ASSERT_EQ(zigzag_decode(zigzag_encode(v)), v);
}

TEST(Zigzag, PointsRoundTrip) {
  for (std::int64_t x = -40; x <= 40; ++x) {
    for (std::int64_t y = -40; y <= 40; ++y) {
      const Point p{x, y};
      ASSERT_EQ(point_decode(point_encode(p)), p);
      ASSERT_EQ(point_encode(p), pair_encode(zigzag_encode(x), zigzag_encode(y)));
    }
  }
}

TEST(Smpl, Examples) {
  const std::vector<TraceEntry> a{std::nullopt, 3, std::nullopt, 3, 5};
  EXPECT_EQ(smpl(a), (std::set<Natural>{3, 5}));
  EXPECT_TRUE(smpl(std::vector<TraceEntry>{}).empty());
  EXPECT_TRUE(smpl(std::vector<TraceEntry>{std::nullopt, std::nullopt}).empty());
}

TEST(Trace, PrefixReturnsFirstEntries) {
  const Trace t({1, std::nullopt, 2, 3});
  EXPECT_EQ(t.prefix(0).size(), 0u);
  ASSERT_EQ(t.prefix(2).size(), 2u);
  EXPECT_EQ(t.prefix(2)[1], std::nullopt);
  EXPECT_EQ(t.prefix(99).size(), 4u);
}

TEST(Trace, CanonicalEnumeratesThenRepeats) {
  const ChainFamily chain(10);
  const Language l3 = chain.chain_language(3);
  EXPECT_EQ(trace_generate(l3, Schedule::canonical, 0, 4).entries(),
            (std::vector<TraceEntry>{0, 1, 2, 3}));
  EXPECT_EQ(trace_generate(l3, Schedule::canonical, 0, 6).entries(),
            (std::vector<TraceEntry>{0, 1, 2, 3, 3, 3}));
}

TEST(Trace, ZeroLengthAndEmptyLanguage) {
  const ChainFamily chain(10);
  EXPECT_TRUE(trace_generate(chain.chain_language(4), Schedule::padded_seeded, 7, 0).empty());
  const Language none = Language::empty(12, Ordering::natural());
  EXPECT_THROW(trace_generate(none, Schedule::canonical, 0, 3), EmptyLanguage);
  const Trace padded = trace_generate(none, Schedule::padded_seeded, 1, 5);
  EXPECT_TRUE(std::all_of(padded.entries().begin(), padded.entries().end(),
                          [](const TraceEntry& e) { return !e; }));
}

TEST(Trace, SeededSchedulesAreReproducibleAndValid) {
  const RectangleFamily rect(32);
  const Language target = rect.rectangle_language({-3, 2, 0, 4});
  const auto members = target.members();
  for (Schedule s : {Schedule::seeded_random, Schedule::padded_seeded}) {
    const Trace a = trace_generate(target, s, 42, 500);
    const Trace b = trace_generate(target, s, 42, 500);
    const Trace c = trace_generate(target, s, 43, 500);
    EXPECT_EQ(a.entries(), b.entries());
    EXPECT_NE(a.entries(), c.entries());
    for (const auto& e : a.entries()) {
      if (e) ASSERT_TRUE(target.contains(*e));
    }
  }
  EXPECT_EQ(trace_generate(target, Schedule::canonical, 0, members.size()).entries().back(),
            TraceEntry(members.back()));
}

TEST(Trace, PaddedScheduleIsFair) {
  const ChainFamily chain(30);
  const Language target = chain.chain_language(12);
  const Trace t = trace_generate(target, Schedule::padded_seeded, 5, 2000);
  // Each round holds every member once plus at most one padding per member.
  const std::size_t horizon = 2 * 13;
  const auto seen = smpl(t.prefix(horizon));
  EXPECT_EQ(seen.size(), 13u);
  EXPECT_TRUE(std::any_of(t.entries().begin(), t.entries().end(),
                          [](const TraceEntry& e) { return !e; }));
}

TEST(Schedule, NamesRoundTrip) {
  for (Schedule s : {Schedule::canonical, Schedule::seeded_random, Schedule::padded_seeded}) {
    EXPECT_EQ(parse_schedule(to_string(s)), s);
  }
  EXPECT_FALSE(parse_schedule("nope"));
}

TEST(Language, IntersectSingleton) {
  const ChainFamily chain(10);
  const Language l5 = chain.chain_language(5);
  EXPECT_EQ(l5.intersect_singleton(3).members(), (std::vector<Natural>{3}));
  EXPECT_TRUE(l5.intersect_singleton(6).is_empty());
  EXPECT_TRUE(l5.intersect_singleton(1000).is_empty());
}

TEST(Language, FiniteTruncatesAndSorts) {
  const Language l = Language::finite("f", 10, Ordering::natural(), {9, 3, 3, 12, 0});
  EXPECT_EQ(l.members(), (std::vector<Natural>{0, 3, 9}));
  EXPECT_TRUE(l.contains(3));
  EXPECT_FALSE(l.contains(12));
}

TEST(Language, SubsetAndEquality) {
  const ChainFamily chain(10);
  EXPECT_TRUE(is_subset(chain.chain_language(2), chain.chain_language(5)));
  EXPECT_FALSE(is_subset(chain.chain_language(5), chain.chain_language(2)));
  const Language explicit_l2 = Language::finite("x", 12, Ordering::natural(), {0, 1, 2});
  EXPECT_TRUE(same_members(explicit_l2, chain.chain_language(2)));
}

TEST(Ordering, RadialKeyWithTieBreak) {
  const Ordering r = Ordering::radial();
  auto code = [](std::int64_t x, std::int64_t y) { return point_encode({x, y}); };
  EXPECT_TRUE(r.less(code(0, 0), code(1, 0)));
  EXPECT_TRUE(r.less(code(-2, 0), code(0, -2)));
  EXPECT_TRUE(r.less(code(0, -2), code(0, 2)));
  EXPECT_TRUE(r.less(code(0, 2), code(2, 0)));
  EXPECT_TRUE(r.less(code(1, 1), code(-2, 0)));
  EXPECT_FALSE(r.less(code(3, 4), code(3, 4)));
  EXPECT_TRUE(Ordering::natural().less(1, 2));
}

TEST(Program, SemanticEqualityIsAnEquivalence) {
  const ChainFamily chain(6);
  std::vector<Program> programs;
  for (Natural i = 0; i <= 7; ++i) {
    programs.push_back(ChainProgram{i, false});
    programs.push_back(ChainProgram{i, true});
  }
  programs.push_back(ChainProgram{std::nullopt, false});
  for (const auto& a : programs) {
    EXPECT_TRUE(semantically_equal(chain, a, a));
    for (const auto& b : programs) {
      const bool ab = semantically_equal(chain, a, b);
      EXPECT_EQ(ab, semantically_equal(chain, b, a));
      for (const auto& c : programs) {
        if (ab && semantically_equal(chain, b, c)) EXPECT_TRUE(semantically_equal(chain, a, c));
      }
    }
  }
  // L_7 = {0..7} and N = {0..8} differ only at the bound.
  EXPECT_FALSE(semantically_equal(chain, ChainProgram{7, false}, ChainProgram{std::nullopt, false}));
  EXPECT_TRUE(semantically_equal(chain, ChainProgram{3, false}, ChainProgram{3, true}));
}
