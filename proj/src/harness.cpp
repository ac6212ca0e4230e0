#include "cegis/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cegis/error.hpp"
#include "cegis/jsonlog.hpp"
#include "cegis/random.hpp"

namespace cegis {

namespace {

// Equal descriptors denote equal languages within a family, so member lists
// are computed once per descriptor.
class MemberCache {
 public:
  explicit MemberCache(const Family& family) : family_(family) {}

  bool equal(const Program& a, const Program& b) {
    if (a == b) return true;
    const Language la = family_.language(a);
    const Language lb = family_.language(b);
    if (la.descriptor() == lb.descriptor()) return true;
    return members(la) == members(lb);
  }

 private:
  const std::vector<Natural>& members(const Language& l) {
    auto [it, inserted] = cache_.try_emplace(l.descriptor());
    if (inserted) it->second = l.members();
    return it->second;
  }

  const Family& family_;
  std::map<std::string, std::vector<Natural>> cache_;
};

std::string count_of(std::size_t k, std::size_t n) {
  return std::to_string(k) + "/" + std::to_string(n);
}

}  // namespace

// ------------------------------------------------------------------ verdicts

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::converged:
      return "converged";
    case RunStatus::stalled:
      return "stalled";
    case RunStatus::budget_exhausted:
      return "budget-exhausted";
  }
  return "?";
}

std::string to_string(const RunVerdict& verdict) {
  if (verdict.status == RunStatus::converged) {
    return "converged(" + std::to_string(verdict.converged_at) + ")";
  }
  return std::string(to_string(verdict.status));
}

std::size_t default_window(const Language& target) {
  std::size_t members = 0;
  target.for_each_member([&](Natural) { ++members; });
  return std::max<std::size_t>(1, 2 * std::min<std::size_t>(members, 50));
}

std::size_t default_budget(const Family& family) {
  return static_cast<std::size_t>(10 * family.universe_bound());
}

std::size_t count_counterexamples(const EngineRun& run) {
  return static_cast<std::size_t>(
      std::count_if(run.iterations.begin(), run.iterations.end(), [](const IterationRecord& r) {
        return r.verdict && r.verdict->has_counterexample();
      }));
}

RunVerdict convergence_verdict(const Family& family, const EngineRun& run, const Language& target,
                               std::size_t window) {
  window = std::max<std::size_t>(window, 1);
  RunVerdict v;
  v.semantic_match = same_members(family.language(run.final), target);
  const auto& it = run.iterations;
  if (it.size() <= 1) return v;

  MemberCache cache(family);
  const bool refuted = count_counterexamples(run) > 0;
  const bool unchanged = std::all_of(it.begin(), it.end(), [&](const IterationRecord& r) {
    return cache.equal(r.candidate, it.front().candidate);
  });
  if (unchanged && !refuted && !v.semantic_match) {
    v.status = RunStatus::stalled;
    return v;
  }
  if (run.halted) {
    v.status = RunStatus::converged;
    v.converged_at = it.back().iter;
    return v;
  }

  std::size_t start = it.size() - 1;
  while (start > 0 && cache.equal(it[start - 1].candidate, it.back().candidate)) --start;
  const std::size_t stretch = it.size() - start;
  const bool last_none = it.back().verdict && it.back().verdict->is_none();
  if (last_none && stretch >= window) {
    v.status = RunStatus::converged;
    v.converged_at = std::max<std::size_t>(1, it[start].iter);
  }
  return v;
}

RunRow make_row(const Family& family, const EngineRun& run, const Language& target,
                std::size_t window, std::string label) {
  RunRow row;
  row.target = target.descriptor();
  row.variant = std::string(to_string(run.variant));
  row.label = std::move(label);
  row.verdict = convergence_verdict(family, run, target, window);
  row.queries = run.queries;
  row.counterexamples = count_counterexamples(run);
  row.final_program = family.describe(run.final);
  row.log_digest = digest_hex(run_log(family, run));
  return row;
}

// ------------------------------------------------------------------ equivalence

bool EquivalenceReport::all_equal() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const EquivalenceRow& r) {
    return r.finals_equal && r.verdicts_match && r.records_equal;
  });
}

EquivalenceReport demo_theorem1(const std::vector<EquivalenceCase>& cases,
                                const EquivalenceOptions& options) {
  EquivalenceReport report;
  for (const auto& c : cases) {
    const Family& family = *c.family;
    const std::size_t window = default_window(c.target);
    const std::size_t micro_budget = c.budget * static_cast<std::size_t>(family.universe_bound() + 3);
    for (const Natural seed : options.seeds) {
      const Trace trace = trace_generate(c.target, options.schedule, seed, c.budget);
      const EngineRun direct = run_engine(EngineVariant::mincegis, family, c.target, trace,
                                          c.generalizer, options.strategy, c.budget);
      const EngineRun sim = simulate_min_via_arbitrary(family, c.target, trace, c.generalizer,
                                                       options.strategy, micro_budget);

      EquivalenceRow row;
      row.family = std::string(family.name());
      row.target = c.target.descriptor();
      row.seed = seed;
      row.direct_final = family.describe(direct.final);
      row.simulated_final = family.describe(sim.final);
      row.direct_verdict = convergence_verdict(family, direct, c.target, window);
      row.simulated_verdict = convergence_verdict(family, sim, c.target, window);
      row.finals_equal = semantically_equal(family, direct.final, sim.final);
      row.verdicts_match = row.direct_verdict == row.simulated_verdict;
      row.records_equal = direct.iterations == sim.iterations && !sim.budget_exhausted;
      row.direct_queries = direct.queries;
      row.simulated_queries = sim.queries;
      row.direct_digest = digest_hex(run_log(family, direct));
      row.simulated_digest = digest_hex(run_log(family, sim));
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::vector<EquivalenceCase> shipped_equivalence_matrix() {
  std::vector<EquivalenceCase> cases;

  auto chain = std::make_shared<ChainFamily>(20);
  for (Natural i = 0; i <= 20; ++i) {
    cases.push_back({chain, chain->chain_language(i), chain_generalizer(ChainStart::least),
                     default_budget(*chain)});
  }

  auto rect = std::make_shared<RectangleFamily>(32);
  const std::size_t rect_budget = 1500;
  auto add_rect = [&](const Rect& r) {
    cases.push_back({rect, rect->rectangle_language(r), rectangle_generalizer(rect->grid()),
                     rect_budget});
  };
  add_rect({-1, 1, -1, 1});
  std::mt19937_64 rng(mix_seed(2024));
  auto coord = [&] { return static_cast<std::int64_t>(uniform_below(rng, 17)) - 8; };
  for (int k = 0; k < 10; ++k) {
    std::int64_t x0 = coord(), x1 = coord(), y0 = coord(), y1 = coord();
    add_rect({std::min(x0, x1), std::max(x0, x1), std::min(y0, y1), std::max(y0, y1)});
  }
  add_rect(rect->universal_rect());

  auto gold = std::make_shared<GoldFamily>(64);
  for (const Language& t : {gold->full(), gold->minus(0), gold->minus(17)}) {
    cases.push_back({gold, t, gold_generalizer(), 2 * default_budget(*gold)});
  }
  return cases;
}

// ------------------------------------------------------------------ chain separation

SeparationReport demo_lemma1(Natural i_max, std::size_t budget) {
  const ChainFamily family(i_max);
  if (budget == 0) budget = default_budget(family);

  SeparationReport report;
  report.name = "lemma1";
  report.family = std::string(family.name());

  std::size_t cegis_ok = 0;
  std::size_t hcegis_stalled = 0;
  std::size_t hcegis_cex = 0;
  for (Natural i = 0; i <= i_max; ++i) {
    const Language target = family.chain_language(i);
    const Trace trace = trace_generate(target, Schedule::canonical, 0, budget);
    const std::size_t window = default_window(target);

    const EngineRun cegis = run_engine(EngineVariant::cegis, family, target, trace,
                                       chain_generalizer(ChainStart::least),
                                       CexStrategy::first_found(), budget);
    RunRow crow = make_row(family, cegis, target, window, "start L_0");
    crow.expected_queries = static_cast<std::size_t>(i + 2);
    if (crow.verdict.status == RunStatus::converged && crow.verdict.semantic_match &&
        crow.queries == *crow.expected_queries) {
      ++cegis_ok;
    }
    report.rows.push_back(std::move(crow));

    const EngineRun hcegis = run_engine(EngineVariant::hcegis, family, target, trace,
                                        chain_generalizer(ChainStart::universal),
                                        CexStrategy::first_found(), budget);
    RunRow hrow = make_row(family, hcegis, target, window, "start N");
    if (hrow.verdict.status == RunStatus::stalled) ++hcegis_stalled;
    hcegis_cex += hrow.counterexamples;
    report.rows.push_back(std::move(hrow));
  }

  const std::size_t n = static_cast<std::size_t>(i_max) + 1;
  report.holds = cegis_ok == n && hcegis_stalled == n && hcegis_cex == 0;
  report.conclusion = "CEGIS identified " + count_of(cegis_ok, n) +
                      " targets with i+2 queries; HCEGIS stalled on " +
                      count_of(hcegis_stalled, n) + " with " + std::to_string(hcegis_cex) +
                      " counterexamples. ";
  report.conclusion += report.holds ? "CEGIS identifies the chain family and HCEGIS does not."
                                    : "The expected separation was not observed.";
  return report;
}

// ------------------------------------------------------------------ diagonal separation

IndistinguishabilityReport indistinguishability_demo(const DiagonalFamily& family,
                                                     const IndistinguishabilityInstance& instance,
                                                     const Generalizer& generalizer,
                                                     std::size_t budget) {
  IndistinguishabilityReport rep;
  rep.instance = instance;

  const Natural z2_code = pair_encode(0, instance.z2);
  const Natural z1_code = pair_encode(1, instance.z1);
  const std::set<Natural> base = smpl(instance.base_prefix);
  if (base.contains(z2_code)) {
    rep.skipped = true;
    rep.skip_reason = "<0," + std::to_string(instance.z2) + "> occurs in the base prefix";
    return rep;
  }

  std::vector<std::pair<Natural, Natural>> members;
  for (Natural code : base) members.push_back(pair_decode(code));
  members.emplace_back(1, instance.z1);
  const Language l_d = family.fin_language(members);
  members.emplace_back(0, instance.z2);
  const Language l_dp = family.fin_language(members);
  rep.target_d = l_d.descriptor();
  rep.target_d_prime = l_dp.descriptor();
  rep.targets_differ = l_d.contains(z2_code) != l_dp.contains(z2_code);

  std::vector<TraceEntry> entries = instance.base_prefix;
  while (entries.size() < budget) entries.emplace_back(z1_code);
  entries.resize(budget);
  const Trace trace(std::move(entries));
  const CexStrategy strategy = CexStrategy::consistent_avoiding({z2_code});

  try {
    const EngineRun run_d =
        run_engine(EngineVariant::cegis, family, l_d, trace, generalizer, strategy, budget);
    const EngineRun run_dp =
        run_engine(EngineVariant::cegis, family, l_dp, trace, generalizer, strategy, budget);
    rep.log = run_log(family, run_d);
    rep.logs_identical = rep.log == run_log(family, run_dp);
    rep.verdict_d = convergence_verdict(family, run_d, l_d, default_window(l_d));
    rep.verdict_d_prime = convergence_verdict(family, run_dp, l_dp, default_window(l_dp));
    rep.final_program = family.describe(run_d.final);
    rep.mismatched = (rep.verdict_d.semantic_match ? 0 : 1) +
                     (rep.verdict_d_prime.semantic_match ? 0 : 1);
  } catch (const StrategyInfeasible& e) {
    rep.skipped = true;
    rep.skip_reason = e.what();
  }
  return rep;
}

std::vector<IndistinguishabilityInstance> shipped_indistinguishability_instances() {
  auto z = [](Natural n) -> TraceEntry { return pair_encode(0, n); };
  auto o = [](Natural n) -> TraceEntry { return pair_encode(1, n); };
  return {
      {{z(2)}, 7, 9},
      {{z(0)}, 2, 5},
      {{z(1), z(3)}, 4, 8},
      {{z(4), std::nullopt, z(6)}, 5, 12},
      {{z(3), o(1)}, 10, 20},
      {{z(5), z(7)}, 3, 15},
      // <0,3> lies below <1,9>, so the learner probes it and the avoid set
      // cannot be honoured.
      {{z(2)}, 9, 3},
  };
}

std::vector<std::vector<std::pair<Natural, Natural>>> shipped_fin_instances() {
  std::vector<std::vector<std::pair<Natural, Natural>>> out;
  out.push_back({{0, 2}, {0, 5}, {1, 7}});

  std::mt19937_64 rng(mix_seed(7));
  while (out.size() < 10) {
    const std::size_t size = 1 + uniform_below(rng, 8);
    std::set<std::pair<Natural, Natural>> picked;
    bool has_one = false;
    while (picked.size() < size) {
      const Natural j = uniform_below(rng, 2);
      // <j, n> <= 500 needs (j + n)(j + n + 1) / 2 + n <= 500, i.e. n <= 30 - j.
      const Natural n = uniform_below(rng, 31 - j);
      if (pair_encode(j, n) > 500) continue;
      if (!has_one && picked.size() + 1 == size && j == 0) continue;
      picked.emplace(j, n);
      has_one = has_one || j == 1;
    }
    out.emplace_back(picked.begin(), picked.end());
  }
  return out;
}

Lemma2Report demo_lemma2(std::size_t budget) {
  const DiagonalFamily family(1024);
  if (budget == 0) budget = 1500;
  const Generalizer learner = diag_generalizer(family.universe_bound());

  Lemma2Report out;
  SeparationReport& report = out.hcegis;
  report.name = "lemma2";
  report.family = std::string(family.name());

  std::vector<Language> targets;
  for (const auto& inst : shipped_fin_instances()) targets.push_back(family.fin_language(inst));
  for (Natural i = 1; i <= 10; ++i) targets.push_back(family.diag_language(i));

  std::size_t identified = 0;
  for (const Language& target : targets) {
    const Trace trace = trace_generate(target, Schedule::canonical, 0, budget);
    const EngineRun run = run_engine(EngineVariant::hcegis, family, target, trace, learner,
                                     CexStrategy::first_found(), budget);
    RunRow row = make_row(family, run, target, default_window(target));
    if (row.verdict.status == RunStatus::converged && row.verdict.semantic_match) ++identified;
    report.rows.push_back(std::move(row));
  }

  std::size_t demonstrated = 0;
  std::size_t attempted = 0;
  for (const auto& inst : shipped_indistinguishability_instances()) {
    IndistinguishabilityReport pair = indistinguishability_demo(family, inst, learner, 128);
    if (!pair.skipped) {
      ++attempted;
      if (pair.logs_identical && pair.targets_differ && pair.mismatched >= 1) ++demonstrated;
    }
    out.pairs.push_back(std::move(pair));
  }

  const bool hcegis_ok = identified == targets.size();
  const bool cegis_fails = attempted >= 5 && demonstrated == attempted;
  report.holds = hcegis_ok && cegis_fails;
  report.conclusion = "HCEGIS identified " + count_of(identified, targets.size()) +
                      " targets; CEGIS produced identical logs on " +
                      count_of(demonstrated, attempted) +
                      " crafted pairs, each missing at least one target. ";
  report.conclusion += report.holds
                           ? "HCEGIS identifies the diagonal family and CEGIS does not."
                           : "The expected separation was not observed.";
  return out;
}

// ------------------------------------------------------------------ gold

GoldReport demo_gold(std::size_t budget) {
  const GoldFamily family(64);
  if (budget == 0) budget = 128;
  const Generalizer gen = gold_generalizer();
  const Oracle silent = [](const Language&, std::span<const TraceEntry>) {
    return Verdict::none();
  };

  GoldReport report;
  std::vector<Language> targets{family.full()};
  for (Natural i : {0, 17, 40, 64}) targets.push_back(family.minus(i));

  std::vector<std::string> full_ablation;
  bool ok = true;
  for (const Language& target : targets) {
    const Trace trace = trace_generate(target, Schedule::canonical, 0, budget);
    const std::size_t window = default_window(target);
    const EngineRun run = run_engine(EngineVariant::cegis, family, target, trace, gen,
                                     CexStrategy::first_found(), budget);
    const EngineRun ablation = run_with_oracle(EngineVariant::cegis, family, trace, gen, silent,
                                               budget);

    GoldRow row;
    row.target = target.descriptor();
    row.verdict = convergence_verdict(family, run, target, window);
    for (const auto& r : run.iterations) {
      const std::string d = family.describe(r.candidate);
      if (row.conjecture_sequence.empty() || row.conjecture_sequence.back() != d) {
        row.conjecture_sequence.push_back(d);
      }
    }
    row.conjectures = row.conjecture_sequence.size();
    row.ablation_verdict = convergence_verdict(family, ablation, target, window);

    std::vector<std::string> seq;
    for (const auto& r : ablation.iterations) seq.push_back(family.describe(r.candidate));
    if (full_ablation.empty()) full_ablation = seq;
    row.ablation_matches_full = seq == full_ablation;

    const bool is_full = same_members(target, family.full());
    ok = ok && row.verdict.status == RunStatus::converged && row.verdict.semantic_match &&
         row.conjectures <= 2 && row.ablation_matches_full &&
         (is_full || row.ablation_verdict.status == RunStatus::stalled);

    const std::string tag = row.target;
    report.log += run_log(family, run, tag + "/cegis");
    report.log += run_log(family, ablation, tag + "/no-counterexamples");
    report.rows.push_back(std::move(row));
  }
  report.holds = ok;
  return report;
}

// ------------------------------------------------------------------ rectangle

RectangleReport demo_rectangle(Rect target, std::int64_t grid, std::size_t budget) {
  const RectangleFamily family(grid);
  if (budget == 0) budget = 64;
  const Language lang = family.rectangle_language(target);
  const Generalizer gen = rectangle_generalizer(grid);
  const Trace trace = trace_generate(lang, Schedule::canonical, 0, budget);
  const std::size_t window = default_window(lang);

  const EngineRun direct = run_engine(EngineVariant::mincegis, family, lang, trace, gen,
                                      CexStrategy::first_found(), budget);
  const EngineRun sim = simulate_min_via_arbitrary(
      family, lang, trace, gen, CexStrategy::first_found(),
      budget * static_cast<std::size_t>(family.universe_bound() + 3));

  RectangleReport rep;
  rep.target = target;
  rep.grid = grid;
  for (const auto& r : direct.iterations) {
    if (r.verdict && r.verdict->has_counterexample()) {
      const Point p = point_decode(r.verdict->counterexample());
      rep.first_cex = p;
      rep.first_cex_radius = p.x * p.x + p.y * p.y;
      break;
    }
  }
  rep.verdict = convergence_verdict(family, direct, lang, window);
  rep.final_program = family.describe(direct.final);
  rep.queries = direct.queries;
  rep.simulated_verdict = convergence_verdict(family, sim, lang, window);
  rep.simulated_equal = sim.iterations == direct.iterations && !sim.budget_exhausted;
  rep.holds = rep.verdict.status == RunStatus::converged && rep.verdict.semantic_match &&
              rep.simulated_equal && rep.simulated_verdict == rep.verdict;
  rep.log = run_log(family, direct);
  return rep;
}

}  // namespace cegis
