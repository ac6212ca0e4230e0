#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cegis/engines.hpp"
#include "cegis/families.hpp"

namespace cegis {

// ------------------------------------------------------------------ verdicts

enum class RunStatus { converged, stalled, budget_exhausted };
std::string_view to_string(RunStatus status);

struct RunVerdict {
  RunStatus status = RunStatus::budget_exhausted;
  /// Iteration from which the conjecture stayed put; meaningful when converged.
  std::size_t converged_at = 0;
  /// Final program denotes the target on [0, B].
  bool semantic_match = false;

  bool operator==(const RunVerdict&) const = default;
};

/// "converged(k)", "stalled" or "budget-exhausted".
std::string to_string(const RunVerdict& verdict);

/// 2 * min(|target members <= B|, 50), and at least 1.
std::size_t default_window(const Language& target);
/// 10 * B.
std::size_t default_budget(const Family& family);

/// Finite proxy for identification in the limit.
///
/// A run with no steps is budget-exhausted. Stalled: the conjecture never
/// changed, nothing was refuted, and it misses the target. A run that stopped on
/// a frozen program converged where it froze. Otherwise it converged at k when
/// the last `window` conjectures (k the first of the final constant stretch,
/// at least 1) agree semantically and the last verdict was "none".
RunVerdict convergence_verdict(const Family& family, const EngineRun& run, const Language& target,
                               std::size_t window);

std::size_t count_counterexamples(const EngineRun& run);

// ------------------------------------------------------------------ rows

struct RunRow {
  std::string target;
  std::string variant;
  std::string label;
  RunVerdict verdict;
  std::size_t queries = 0;
  std::size_t counterexamples = 0;
  std::string final_program;
  /// FNV-1a of the run's JSONL iteration log.
  std::string log_digest;
  /// Query count the row is expected to hit exactly, when one is known.
  std::optional<std::size_t> expected_queries;
};

RunRow make_row(const Family& family, const EngineRun& run, const Language& target,
                std::size_t window, std::string label = {});

// ------------------------------------------------------------------ equivalence

struct EquivalenceCase {
  std::shared_ptr<const Family> family;
  Language target;
  Generalizer generalizer;
  /// Trace length; also the direct engine's budget.
  std::size_t budget = 0;
};

struct EquivalenceRow {
  std::string family;
  std::string target;
  Natural seed = 0;
  std::string direct_final;
  std::string simulated_final;
  RunVerdict direct_verdict;
  RunVerdict simulated_verdict;
  bool finals_equal = false;
  bool verdicts_match = false;
  /// Macro-steps of the simulation are exactly the direct iterations.
  bool records_equal = false;
  std::size_t direct_queries = 0;
  std::size_t simulated_queries = 0;
  std::string direct_digest;
  std::string simulated_digest;
};

struct EquivalenceReport {
  std::vector<EquivalenceRow> rows;
  bool all_equal() const;
};

struct EquivalenceOptions {
  std::vector<Natural> seeds{1, 2, 3};
  Schedule schedule = Schedule::padded_seeded;
  CexStrategy strategy = CexStrategy::first_found();
};

/// Runs direct MinCEGIS and the arbitrary-counterexample simulation on the
/// same trace for every case and seed, and compares them.
EquivalenceReport demo_theorem1(const std::vector<EquivalenceCase>& cases,
                                const EquivalenceOptions& options = {});

/// Chain targets L_0..L_20, rectangle (-1,1,-1,1), ten seeded rectangles within
/// +-8, the whole grid, and three gold targets.
std::vector<EquivalenceCase> shipped_equivalence_matrix();

// ------------------------------------------------------------------ separations

struct SeparationReport {
  std::string name;
  std::string family;
  std::vector<RunRow> rows;
  /// Recomputed from the rows.
  std::string conclusion;
  bool holds = false;
};

/// For i <= i_max over the chain family capped at i_max: CEGIS from L_0 and
/// HCEGIS from the universal guess. Budget 0 selects the default.
SeparationReport demo_lemma1(Natural i_max = 20, std::size_t budget = 0);

struct IndistinguishabilityInstance {
  std::vector<TraceEntry> base_prefix;
  Natural z1 = 0;
  Natural z2 = 0;
};

struct IndistinguishabilityReport {
  IndistinguishabilityInstance instance;
  bool skipped = false;
  std::string skip_reason;
  std::string target_d;
  std::string target_d_prime;
  /// <0, z2> lies in exactly one of the targets.
  bool targets_differ = false;
  bool logs_identical = false;
  RunVerdict verdict_d;
  RunVerdict verdict_d_prime;
  std::string final_program;
  /// Runs whose final misses its target.
  std::size_t mismatched = 0;
  std::string log;
};

/// CEGIS with the consistent-avoiding strategy (avoid <0, z2>) on the trace
/// base_prefix, <1, z1>, <1, z1>, ... against L^d = SMPL(base) + {<1, z1>} and
/// L^d' = L^d + {<0, z2>}. StrategyInfeasible marks the instance skipped.
IndistinguishabilityReport indistinguishability_demo(const DiagonalFamily& family,
                                                     const IndistinguishabilityInstance& instance,
                                                     const Generalizer& generalizer,
                                                     std::size_t budget);

std::vector<IndistinguishabilityInstance> shipped_indistinguishability_instances();

struct Lemma2Report {
  SeparationReport hcegis;
  std::vector<IndistinguishabilityReport> pairs;
};

/// HCEGIS on ten fin instances (size <= 8, codes <= 500) and diag(1..10), plus
/// the crafted CEGIS pairs. Budget 0 selects 1500.
Lemma2Report demo_lemma2(std::size_t budget = 0);

/// Ten deterministic fin instances, the first being {<0,2>,<0,5>,<1,7>}.
std::vector<std::vector<std::pair<Natural, Natural>>> shipped_fin_instances();

// ------------------------------------------------------------------ gold

struct GoldRow {
  std::string target;
  RunVerdict verdict;
  /// Distinct conjectures of the CEGIS run.
  std::size_t conjectures = 0;
  std::vector<std::string> conjecture_sequence;
  RunVerdict ablation_verdict;
  /// The always-none ablation produced the same log as on V*.
  bool ablation_matches_full = false;
};

struct GoldReport {
  std::vector<GoldRow> rows;
  bool holds = false;
  std::string log;
};

/// Budget 0 selects 128.
GoldReport demo_gold(std::size_t budget = 0);

// ------------------------------------------------------------------ rectangle

struct RectangleReport {
  Rect target;
  std::int64_t grid = 32;
  std::optional<Point> first_cex;
  std::optional<std::int64_t> first_cex_radius;
  RunVerdict verdict;
  std::string final_program;
  std::size_t queries = 0;
  RunVerdict simulated_verdict;
  bool simulated_equal = false;
  bool holds = false;
  std::string log;
};

/// MinCEGIS from the whole grid on a canonical trace, plus the simulation.
/// Budget 0 selects 64.
RectangleReport demo_rectangle(Rect target = {-1, 1, -1, 1}, std::int64_t grid = 32,
                               std::size_t budget = 0);

}  // namespace cegis
