#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cegis/program.hpp"
#include "cegis/trace.hpp"
#include "cegis/verifiers.hpp"

namespace cegis {

// ------------------------------------------------------------------ generalizers

/// The inductive step F(previous, entry, verdict) plus the initial guess.
/// `step` must be a pure function of its three arguments.
struct Generalizer {
  std::string name;
  Program initial;
  std::function<Program(const Program&, const TraceEntry&, const Verdict&)> step;
};

enum class ChainStart {
  least,      ///< start from L_0
  universal,  ///< start from the universal language
};

/// Guess L_{j+1} while no counterexample arrives; on a counterexample against
/// L_{j+1} freeze at L_j. From the universal start a counterexample drops to L_0.
/// Without a counterexample, indices past `top` give way to the universal language.
Generalizer chain_generalizer(ChainStart start = ChainStart::least,
                              std::optional<Natural> top = std::nullopt);

/// Starts from the whole grid. Positives grow a hull kept in the program and
/// re-expand the conjecture if needed; a counterexample moves one bound just
/// past it on an axis where it lies outside the hull (preferring the axis of
/// larger |coordinate|, x on ties), never cutting the hull.
Generalizer rectangle_generalizer(std::int64_t grid = 32);

/// Learner for the diagonal family under history-bounded counterexamples.
///
/// Until some <1, k> is seen it conjectures diag(j) for the least j with
/// <0, j> observed. Afterwards it keeps <0, j>, the largest code seen and every
/// later entry, and reconstructs membership of every code below the largest
/// observed code with singleton probes {x}, where "no
/// counterexample" means x is a member, and conjectures the recovered set.
/// Throws ProbeOverflow once more than `probe_cap` probes were issued.
Generalizer diag_generalizer(Natural probe_cap = std::numeric_limits<Natural>::max());

/// Start from V*; on counterexample x conjecture V* - {x} and freeze. A
/// counterexample after freezing throws InconsistentOracle.
Generalizer gold_generalizer();

// ------------------------------------------------------------------ runs

enum class EngineVariant { cegis, mincegis, hcegis, simulated_mincegis };

std::string_view to_string(EngineVariant variant);
std::optional<EngineVariant> parse_engine_variant(std::string_view name);

enum class Event { conjecture, probe, freeze };
std::string_view to_string(Event event);

struct IterationRecord {
  std::size_t iter = 0;
  /// Entry consumed by this iteration; empty on iteration 0.
  TraceEntry trace_entry;
  /// Conjecture after this iteration.
  Program candidate;
  /// Answer about the previous iteration's conjecture; empty on iteration 0.
  std::optional<Verdict> verdict;
  Event event = Event::conjecture;

  bool operator==(const IterationRecord&) const = default;
};

/// Which update the min-counterexample simulation applied in one micro-step.
enum class SimCase {
  replay_known,   ///< refuted, minimal counterexample cached: replay
  probe_start,    ///< refuted, minimal counterexample unknown: start probing
  accept_subset,  ///< not refuted: cache "none" and replay
  probe_hit,      ///< probe refuted: its element is the minimal counterexample
  probe_advance,  ///< probe not refuted: try the next element
};
std::string_view to_string(SimCase c);

struct MicroStep {
  std::size_t iter = 0;
  /// Whether an incoming entry was appended to the backlog.
  bool consumed = false;
  TraceEntry trace_entry;
  /// The language handed to check().
  std::string checked;
  /// The simulation's candidate after this step (a program or a probe).
  std::string candidate;
  Verdict verdict = Verdict::none();
  SimCase sim_case = SimCase::accept_subset;
  bool frozen = false;
  std::size_t done_length = 0;
  Natural mu = 0;
};

struct EngineRun {
  EngineVariant variant = EngineVariant::cegis;
  std::size_t budget = 0;
  /// For simulated runs: the reproduced macro-steps.
  std::vector<IterationRecord> iterations;
  Program final;
  /// Stopped on a frozen program.
  bool halted = false;
  /// Simulation ran out of micro-steps before consuming its trace.
  bool budget_exhausted = false;
  /// Number of verifier calls.
  std::size_t queries = 0;
  /// Simulated runs only.
  std::vector<MicroStep> micro_steps;
};

/// A verifier closed over its target: (candidate, consumed prefix) -> verdict.
using Oracle = std::function<Verdict(const Language&, std::span<const TraceEntry>)>;

/// The recursion P_n = F(P_{n-1}, trace(n), oracle(L(P_{n-1}), trace[n-1])),
/// for min(budget, |trace|) steps or until a frozen program appears.
EngineRun run_with_oracle(EngineVariant label, const Family& family, const Trace& trace,
                          const Generalizer& generalizer, const Oracle& oracle,
                          std::size_t budget);

/// Runs the variant's verifier against `target`. The strategy applies to the
/// arbitrary-counterexample verifier, including the one inside the simulation.
EngineRun run_engine(EngineVariant variant, const Family& family, const Language& target,
                     const Trace& trace, const Generalizer& generalizer,
                     const CexStrategy& strategy, std::size_t budget);

// ------------------------------------------------------------------ simulation

/// Cache of minimal counterexamples: a Verdict (none meaning "no
/// counterexample exists") for finitely many programs, unknown for the rest.
class LceMap {
 public:
  struct Unknown {
    bool operator==(const Unknown&) const = default;
  };
  using Entry = std::variant<Unknown, Verdict>;

  Entry lookup(const Program& program) const;
  bool known(const Program& program) const { return entries_.contains(program); }
  void store(const Program& program, const Verdict& verdict);
  std::size_t size() const { return entries_.size(); }
  const std::map<Program, Verdict>& entries() const { return entries_; }

 private:
  std::map<Program, Verdict> entries_;
};

struct ReplayUndefined {
  /// First program on the replay path whose cache entry is unknown.
  Program at;
};

/// Replays the min-counterexample recursion from `start` over `prefix`,
/// taking every verdict from the cache.
std::variant<Program, ReplayUndefined> t_lce_replay(const LceMap& lce, const Program& start,
                                                    std::span<const TraceEntry> prefix,
                                                    const Generalizer& generalizer);

struct SimState {
  LceMap lce;
  Program sim;
  Program last;
  /// Set while searching for a minimal counterexample of `last`; the
  /// candidate is then L(last) & {probe order[mu]}.
  bool probing = false;
  Natural mu = 0;
  std::deque<TraceEntry> backlog;
  std::size_t done_length = 0;
};

/// Reproduces a min-counterexample run while only ever calling check().
///
/// Each micro-step calls check once and moves one incoming trace entry into
/// the backlog. Minimal counterexamples are found by probing L(P) & {e} for e
/// in the family ordering; once known they are cached and the backlog is
/// replayed as far as the cache allows.
class MinCexSimulator {
 public:
  MinCexSimulator(const Family& family, const Language& target, const Trace& trace,
                  const Generalizer& generalizer, CexStrategy strategy);

  /// Performs one micro-step; returns false when there is nothing left to do.
  bool step();
  bool finished() const;

  const SimState& state() const { return state_; }
  const std::vector<IterationRecord>& macro_steps() const { return macro_; }
  const std::vector<MicroStep>& micro_steps() const { return micro_; }
  bool halted() const { return halted_; }
  /// Probes per minimal-counterexample search never exceed this.
  std::size_t probe_cap() const { return order_.size(); }

 private:
  Language candidate_language() const;
  std::string candidate_name() const;
  void replay_from(const Program& start);

  const Family& family_;
  Language target_;
  const Trace& trace_;
  Generalizer generalizer_;
  CexStrategy strategy_;
  std::vector<Natural> order_;

  SimState state_;
  std::size_t next_ = 0;
  bool halted_ = false;
  std::size_t since_progress_ = 0;
  std::vector<IterationRecord> macro_;
  std::vector<MicroStep> micro_;
};

/// Drives MinCexSimulator for at most `budget` micro-steps.
EngineRun simulate_min_via_arbitrary(const Family& family, const Language& target,
                                     const Trace& trace, const Generalizer& generalizer,
                                     const CexStrategy& strategy, std::size_t budget);

}  // namespace cegis
