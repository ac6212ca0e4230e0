#include <gtest/gtest.h>

#include "cegis/error.hpp"
#include "cegis/harness.hpp"
#include "cegis/jsonlog.hpp"
#include "cegis/report.hpp"

using namespace cegis;

namespace {

EngineRun synthetic(const std::vector<std::optional<Natural>>& indices,
                    const std::vector<std::optional<Natural>>& cexes, bool halted = false) {
  EngineRun run;
  for (std::size_t n = 0; n < indices.size(); ++n) {
    IterationRecord r;
    r.iter = n;
    r.candidate = ChainProgram{indices[n], halted && n + 1 == indices.size()};
    if (n > 0) {
      r.trace_entry = 0;
      r.verdict = Verdict::none();
    }
    run.iterations.push_back(r);
  }
  const ChainFamily f(10);
  for (std::size_t n = 1; n < indices.size(); ++n) {
    if (cexes[n]) {
      const Language prev = f.language(run.iterations[n - 1].candidate);
      run.iterations[n].verdict =
          Verdict::counterexample(*cexes[n], prev, Language::empty(12, Ordering::natural()));
    }
  }
  run.final = run.iterations.back().candidate;
  run.halted = halted;
  run.queries = indices.size() - 1;
  return run;
}

}  // namespace

TEST(Convergence, EmptyRunIsBudgetExhausted) {
  const ChainFamily f(10);
  const RunVerdict v = convergence_verdict(f, synthetic({3}, {std::nullopt}), f.chain_language(3), 1);
  EXPECT_EQ(v.status, RunStatus::budget_exhausted);
  EXPECT_TRUE(v.semantic_match);
  EXPECT_EQ(to_string(v), "budget-exhausted");
}

TEST(Convergence, UnrefutedWrongGuessStalls) {
  const ChainFamily f(10);
  const std::optional<Natural> n;
  const EngineRun run = synthetic({n, n, n, n}, {n, n, n, n});
  const RunVerdict v = convergence_verdict(f, run, f.chain_language(3), 2);
  EXPECT_EQ(v.status, RunStatus::stalled);
  EXPECT_FALSE(v.semantic_match);
  EXPECT_EQ(to_string(v), "stalled");
}

TEST(Convergence, ConstantCorrectGuessConvergesAtOne) {
  const ChainFamily f(10);
  const std::optional<Natural> n;
  const EngineRun run = synthetic({3, 3, 3, 3, 3}, {n, n, n, n, n});
  const RunVerdict v = convergence_verdict(f, run, f.chain_language(3), 4);
  EXPECT_EQ(v.status, RunStatus::converged);
  EXPECT_EQ(v.converged_at, 1u);
  EXPECT_EQ(to_string(v), "converged(1)");
  EXPECT_EQ(convergence_verdict(f, run, f.chain_language(3), 6).status,
            RunStatus::budget_exhausted);
}

TEST(Convergence, FinalStretchDeterminesIndex) {
  const ChainFamily f(10);
  const std::optional<Natural> n;
  const EngineRun run = synthetic({1, 2, 3, 3, 3}, {n, n, n, n, n});
  const RunVerdict v = convergence_verdict(f, run, f.chain_language(3), 3);
  EXPECT_EQ(v.status, RunStatus::converged);
  EXPECT_EQ(v.converged_at, 2u);
  EXPECT_EQ(convergence_verdict(f, run, f.chain_language(3), 4).status,
            RunStatus::budget_exhausted);
  // Converged to a wrong language: converged, but no semantic match.
  const RunVerdict wrong = convergence_verdict(f, run, f.chain_language(5), 3);
  EXPECT_EQ(wrong.status, RunStatus::converged);
  EXPECT_FALSE(wrong.semantic_match);
}

TEST(Convergence, TrailingCounterexamplePreventsConvergence) {
  const ChainFamily f(10);
  const std::optional<Natural> n;
  const EngineRun run = synthetic({4, 4, 4, 4}, {n, n, n, 4});
  EXPECT_EQ(convergence_verdict(f, run, f.chain_language(3), 1).status,
            RunStatus::budget_exhausted);
}

TEST(Convergence, HaltedRunConvergesWhereItFroze) {
  const ChainFamily f(10);
  const std::optional<Natural> n;
  const EngineRun run = synthetic({0, 1, 2, 1}, {n, n, n, 2}, true);
  const RunVerdict v = convergence_verdict(f, run, f.chain_language(1), 100);
  EXPECT_EQ(v.status, RunStatus::converged);
  EXPECT_EQ(v.converged_at, 3u);
  EXPECT_TRUE(v.semantic_match);
}

TEST(Convergence, Defaults) {
  const ChainFamily f(10);
  EXPECT_EQ(default_window(f.chain_language(3)), 8u);
  EXPECT_EQ(default_window(ChainFamily(100).chain_language(99)), 100u);
  EXPECT_EQ(default_window(Language::empty(5, Ordering::natural())), 1u);
  EXPECT_EQ(default_budget(f), 120u);
}

TEST(JsonLog, FnvVectors) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(digest_hex(""), "cbf29ce484222325");
}

TEST(JsonLog, IterationLineKeyOrder) {
  const ChainFamily f(10);
  IterationRecord r{2, 1, ChainProgram{3, false}, Verdict::none(), Event::conjecture};
  EXPECT_EQ(iteration_line(f, r),
            R"({"iter":2,"trace_entry":1,"candidate":"L_3","cex":null,"verdict":"none","event":"conjecture"})");
  IterationRecord r0{0, std::nullopt, ChainProgram{0, false}, std::nullopt, Event::conjecture};
  EXPECT_EQ(iteration_line(f, r0, "x"),
            R"({"run":"x","iter":0,"trace_entry":null,"candidate":"L_0","cex":null,"verdict":null,"event":"conjecture"})");
}

TEST(JsonLog, PairFamiliesDecode) {
  const RectangleFamily f(32);
  const Language t = f.rectangle_language({-1, 1, -1, 1});
  IterationRecord r{1, point_encode({1, -1}), RectangleProgram{{-1, 32, -32, 32}, Rect{1, 1, -1, -1}},
                    Verdict::counterexample(point_encode({-2, 0}), f.universal(), t), Event::conjecture};
  const std::string line = iteration_line(f, r);
  EXPECT_NE(line.find(R"("trace_decoded":[1,-1])"), std::string::npos) << line;
  EXPECT_NE(line.find(R"("cex_decoded":[-2,0])"), std::string::npos) << line;
  EXPECT_NE(line.find(R"("verdict":"cex")"), std::string::npos) << line;
}

TEST(ChainSeparation, ExactQueryCountsAndStalls) {
  const SeparationReport r = demo_lemma1(20);
  EXPECT_TRUE(r.holds) << r.conclusion;
  std::size_t cegis_rows = 0, hcegis_rows = 0;
  for (const auto& row : r.rows) {
    if (row.variant == "cegis") {
      ++cegis_rows;
      ASSERT_TRUE(row.expected_queries);
      EXPECT_EQ(row.queries, *row.expected_queries);
      EXPECT_EQ(row.verdict.status, RunStatus::converged);
      EXPECT_TRUE(row.verdict.semantic_match);
    } else {
      ++hcegis_rows;
      EXPECT_EQ(row.variant, "hcegis");
      EXPECT_EQ(row.counterexamples, 0u);
      EXPECT_EQ(row.verdict.status, RunStatus::stalled);
    }
  }
  EXPECT_EQ(cegis_rows, 21u);
  EXPECT_EQ(hcegis_rows, 21u);
  // Queries are i + 2 for target L_i, with i read from the row's target.
  for (const auto& row : r.rows) {
    if (row.variant != "cegis") continue;
    const std::size_t i = std::stoul(row.target.substr(2));
    EXPECT_EQ(row.queries, i + 2) << row.target;
  }
}

TEST(DiagonalSeparation, HcegisIdentifiesAndCegisPairsCollide) {
  const Lemma2Report r = demo_lemma2();
  EXPECT_TRUE(r.hcegis.holds) << r.hcegis.conclusion;
  EXPECT_EQ(r.hcegis.rows.size(), 20u);
  for (const auto& row : r.hcegis.rows) {
    EXPECT_TRUE(row.verdict.semantic_match) << row.target;
    EXPECT_EQ(row.verdict.status, RunStatus::converged) << row.target;
  }
  std::size_t good = 0;
  for (const auto& p : r.pairs) {
    if (p.skipped) continue;
    EXPECT_TRUE(p.targets_differ);
    EXPECT_TRUE(p.logs_identical);
    EXPECT_GE(p.mismatched, 1u);
    ++good;
  }
  EXPECT_GE(good, 5u);
}

TEST(DiagonalSeparation, FinInstancesRespectLimits) {
  const auto instances = shipped_fin_instances();
  ASSERT_EQ(instances.size(), 10u);
  EXPECT_EQ(instances.front(),
            (std::vector<std::pair<Natural, Natural>>{{0, 2}, {0, 5}, {1, 7}}));
  for (const auto& inst : instances) {
    EXPECT_LE(inst.size(), 8u);
    for (const auto& [j, n] : inst) EXPECT_LE(pair_encode(j, n), 500u);
  }
}

TEST(DiagonalSeparation, InfeasibleInstanceIsSkipped) {
  const DiagonalFamily f(1024);
  IndistinguishabilityInstance inst{{pair_encode(0, 2)}, 9, 3};
  const auto r = indistinguishability_demo(f, inst, diag_generalizer(), 64);
  // Every counterexample against a too-large guess would have to be <0,3>.
  EXPECT_TRUE(r.skipped);
  EXPECT_FALSE(r.skip_reason.empty());
}

TEST(Gold, SingleCounterexampleIdentifiesMinusTargets) {
  const GoldReport r = demo_gold();
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.rows.size(), 5u);
  EXPECT_EQ(r.rows[0].target, "V*");
  EXPECT_TRUE(r.rows[0].verdict.semantic_match);
  for (std::size_t k = 1; k < r.rows.size(); ++k) {
    EXPECT_EQ(r.rows[k].conjectures, 2u);
    EXPECT_TRUE(r.rows[k].verdict.semantic_match);
    EXPECT_EQ(r.rows[k].ablation_verdict.status, RunStatus::stalled);
    EXPECT_TRUE(r.rows[k].ablation_matches_full);
  }
}

TEST(Rectangle, FirstMinimalCounterexample) {
  const RectangleReport r = demo_rectangle();
  ASSERT_TRUE(r.first_cex);
  EXPECT_EQ(*r.first_cex, (Point{-2, 0}));
  EXPECT_EQ(r.first_cex_radius, 4);
  EXPECT_EQ(r.verdict.status, RunStatus::converged);
  EXPECT_TRUE(r.verdict.semantic_match);
  EXPECT_EQ(r.final_program, "[-1,1]x[-1,1]");
  EXPECT_TRUE(r.simulated_equal);
  EXPECT_TRUE(r.holds);
}

TEST(SimulationEquivalence, SmallMatrixAgrees) {
  auto chain = std::make_shared<ChainFamily>(8);
  auto gold = std::make_shared<GoldFamily>(16);
  std::vector<EquivalenceCase> cases;
  for (Natural i : {0, 4, 8}) {
    cases.push_back({chain, chain->chain_language(i), chain_generalizer(ChainStart::least, 9), 100});
  }
  cases.push_back({gold, gold->minus(3), gold_generalizer(), 60});
  EquivalenceOptions opts;
  opts.strategy = CexStrategy::adversarial_max();
  const EquivalenceReport r = demo_theorem1(cases, opts);
  EXPECT_EQ(r.rows.size(), 12u);
  EXPECT_TRUE(r.all_equal());
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.direct_digest, row.simulated_digest);
    EXPECT_GE(row.simulated_queries, row.direct_queries);
  }
}

TEST(SimulationEquivalence, ShippedMatrixShape) {
  const auto cases = shipped_equivalence_matrix();
  std::size_t chain = 0, rect = 0, gold = 0;
  for (const auto& c : cases) {
    const std::string name(c.family->name());
    chain += name == "chain";
    rect += name == "rectangle";
    gold += name == "gold";
  }
  EXPECT_EQ(chain, 21u);
  EXPECT_EQ(rect, 12u);
  EXPECT_EQ(gold, 3u);
}

TEST(Report, RenderedDemoIsConsistent) {
  const RenderedReport r = render(demo_lemma1(5));
  EXPECT_NE(r.markdown.find("L_5"), std::string::npos);
  EXPECT_EQ(r.json.front(), '{');
  std::size_t lines = 0;
  for (char c : r.jsonl) lines += c == '\n';
  EXPECT_EQ(lines, 12u);
}
