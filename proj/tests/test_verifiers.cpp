#include <gtest/gtest.h>

#include "cegis/error.hpp"
#include "cegis/families.hpp"
#include "cegis/verifiers.hpp"
#include "oracles.hpp"

using namespace cegis;

namespace {

using oracle::random_chain;
using oracle::random_diag;
using oracle::random_gold;
using oracle::random_history;
using oracle::random_rect;

void check_pair(const Language& c, const Language& t, const std::vector<TraceEntry>& history) {
  ASSERT_EQ(oracle::verifier_disagreement(c, t, history), "");
}

}  // namespace

TEST(Verifiers, ChainOracleAgreement) {
  const ChainFamily f(30);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 250; ++k) {
    const Language c = random_chain(f, rng), t = random_chain(f, rng);
    const auto h = random_history(t, rng);
    check_pair(c, t, h);
  }
}

TEST(Verifiers, RectangleOracleAgreement) {
  const RectangleFamily f(8);
  std::mt19937_64 rng(12);
  for (int k = 0; k < 250; ++k) {
    const Language c = f.rectangle_language(random_rect(rng, 8));
    const Language t = f.rectangle_language(random_rect(rng, 8));
    const auto h = random_history(t, rng);
    check_pair(c, t, h);
  }
}

TEST(Verifiers, DiagonalOracleAgreement) {
  const DiagonalFamily f(1024);
  std::mt19937_64 rng(13);
  for (int k = 0; k < 250; ++k) {
    const Language c = random_diag(f, rng), t = random_diag(f, rng);
    const auto h = random_history(t, rng);
    check_pair(c, t, h);
  }
}

TEST(Verifiers, GoldOracleAgreement) {
  const GoldFamily f(64);
  std::mt19937_64 rng(14);
  for (int k = 0; k < 250; ++k) {
    const Language c = random_gold(f, rng), t = random_gold(f, rng);
    const auto h = random_history(t, rng);
    check_pair(c, t, h);
  }
}

TEST(Verifiers, StrategiesPickFromDifference) {
  const ChainFamily f(20);
  const Language c = f.chain_language(15), t = f.chain_language(4);
  EXPECT_EQ(check(c, t).counterexample(), 5u);
  EXPECT_EQ(check(c, t, CexStrategy::adversarial_max()).counterexample(), 15u);
  EXPECT_EQ(check(c, t, CexStrategy::consistent_avoiding({5, 6})).counterexample(), 7u);
  EXPECT_THROW(check(f.chain_language(6), t, CexStrategy::consistent_avoiding({5, 6})),
               StrategyInfeasible);
  for (Natural seed = 0; seed < 20; ++seed) {
    const Verdict a = check(c, t, CexStrategy::seeded_random(seed));
    EXPECT_EQ(a, check(c, t, CexStrategy::seeded_random(seed)));
    EXPECT_GE(a.counterexample(), 5u);
    EXPECT_LE(a.counterexample(), 15u);
  }
  EXPECT_TRUE(check(t, c, CexStrategy::consistent_avoiding({0, 1, 2})).is_none());
}

TEST(Verifiers, HistoryBoundedExample) {
  const DiagonalFamily f(1024);
  const Language candidate = Language::finite("{17}", 1024, Ordering::natural(), {17});
  const Language target = f.diag_language(3);
  const std::vector<TraceEntry> history{pair_encode(0, 3), pair_encode(1, 9)};
  ASSERT_EQ(pair_encode(1, 9), 64u);
  const Verdict v = hcheck(candidate, target, history);
  ASSERT_TRUE(v.has_counterexample());
  EXPECT_EQ(v.counterexample(), 17u);
  EXPECT_TRUE(hcheck(candidate, target, std::vector<TraceEntry>{pair_encode(0, 3)}).is_none());
  EXPECT_TRUE(hcheck(candidate, target, std::vector<TraceEntry>{}).is_none());
  EXPECT_TRUE(hcheck(candidate, target, std::vector<TraceEntry>{17}).is_none());
}

TEST(Verifiers, RectangleMinimalCounterexample) {
  const RectangleFamily f(32);
  const Verdict v = mincheck(f.universal(), f.rectangle_language({-1, 1, -1, 1}));
  ASSERT_TRUE(v.has_counterexample());
  EXPECT_EQ(point_decode(v.counterexample()), (Point{-2, 0}));
}

TEST(Verifiers, UnsoundCounterexampleRejected) {
  const ChainFamily f(10);
  EXPECT_THROW(Verdict::counterexample(2, f.chain_language(5), f.chain_language(3)),
               InconsistentOracle);
  EXPECT_THROW(Verdict::counterexample(7, f.chain_language(5), f.chain_language(3)),
               InconsistentOracle);
  EXPECT_NO_THROW(Verdict::counterexample(4, f.chain_language(5), f.chain_language(3)));
}

TEST(Verifiers, MismatchedBoundsRejected) {
  EXPECT_THROW(check(ChainFamily(10).chain_language(1), ChainFamily(11).chain_language(1)),
               std::invalid_argument);
}

TEST(Verifiers, StrategyNamesRoundTrip) {
  using K = CexStrategy::Kind;
  for (auto k : {K::first_found, K::seeded_random, K::adversarial_max, K::consistent_avoiding}) {
    EXPECT_EQ(parse_strategy_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_strategy_kind("random"));
}
