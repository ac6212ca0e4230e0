#include "cegis/engines.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cegis/error.hpp"

namespace cegis {

namespace {

template <typename T>
const T& as(const Program& program, std::string_view who) {
  const T* p = std::get_if<T>(&program);
  if (p == nullptr) throw EngineFault(std::string(who) + " generalizer received a foreign program");
  return *p;
}

Event classify(const Program& program) {
  if (is_frozen(program)) return Event::freeze;
  if (is_probe(program)) return Event::probe;
  return Event::conjecture;
}

void insert_sorted(std::vector<Natural>& v, Natural x) {
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

Rect span_with(const Rect& r, Point p) {
  return {std::min(r.x_lo, p.x), std::max(r.x_hi, p.x), std::min(r.y_lo, p.y),
          std::max(r.y_hi, p.y)};
}

}  // namespace

// ------------------------------------------------------------------ generalizers

Generalizer chain_generalizer(ChainStart start, std::optional<Natural> top) {
  Generalizer g;
  g.name = start == ChainStart::least ? "chain" : "chain-from-top";
  g.initial = start == ChainStart::least ? ChainProgram{0, false} : ChainProgram{std::nullopt, false};
  g.step = [top](const Program& prev, const TraceEntry&, const Verdict& verdict) -> Program {
    const auto& p = as<ChainProgram>(prev, "chain");
    if (p.frozen) return p;
    if (verdict.is_none()) {
      if (!p.index || (top && *p.index >= *top)) return ChainProgram{std::nullopt, false};
      return ChainProgram{*p.index + 1, false};
    }
    if (!p.index) return ChainProgram{0, false};
    if (*p.index == 0) throw InconsistentOracle("L_0 was refuted but every chain member contains 0");
    return ChainProgram{*p.index - 1, true};
  };
  return g;
}

Generalizer rectangle_generalizer(std::int64_t grid) {
  Generalizer g;
  g.name = "rectangle";
  g.initial = RectangleProgram{{-grid, grid, -grid, grid}, std::nullopt};
  g.step = [](const Program& prev, const TraceEntry& entry, const Verdict& verdict) -> Program {
    RectangleProgram p = as<RectangleProgram>(prev, "rectangle");
    if (entry) {
      const Point e = point_decode(*entry);
      p.hull = p.hull ? span_with(*p.hull, e) : Rect{e.x, e.x, e.y, e.y};
      if (!p.bounds.contains(e)) p.bounds = p.bounds.is_empty() ? *p.hull : span_with(p.bounds, e);
    }
    if (verdict.is_none()) return p;

    const Point c = point_decode(verdict.counterexample());
    if (p.hull && p.hull->contains(c)) {
      throw InconsistentOracle("counterexample lies inside the hull of positive examples");
    }
    const bool x_free = !p.hull || c.x < p.hull->x_lo || c.x > p.hull->x_hi;
    const bool y_free = !p.hull || c.y < p.hull->y_lo || c.y > p.hull->y_hi;
    const bool use_x = x_free && (!y_free || std::abs(c.x) >= std::abs(c.y));

    const std::int64_t v = use_x ? c.x : c.y;
    bool below;
    if (p.hull) {
      below = use_x ? c.x < p.hull->x_lo : c.y < p.hull->y_lo;
    } else {
      below = v <= 0;
    }
    std::int64_t& lo = use_x ? p.bounds.x_lo : p.bounds.y_lo;
    std::int64_t& hi = use_x ? p.bounds.x_hi : p.bounds.y_hi;
    if (below) {
      lo = std::max(lo, v + 1);
    } else {
      hi = std::min(hi, v - 1);
    }
    return p;
  };
  return g;
}

Generalizer diag_generalizer(Natural probe_cap) {
  Generalizer g;
  g.name = "diagonal";
  g.initial = DiagProgram{};
  g.step = [probe_cap](const Program& prev, const TraceEntry& entry,
                       const Verdict& verdict) -> Program {
    DiagProgram p = as<DiagProgram>(prev, "diagonal");

    if (p.recovering) {
      if (p.shape == DiagProgram::Shape::finite && verdict.has_counterexample()) {
        throw InconsistentOracle("recovered finite set was refuted");
      }
      if (p.shape == DiagProgram::Shape::probe) {
        if (verdict.is_none()) insert_sorted(p.recovered, p.probe);
        p.cursor = p.probe + 1;
      }
    }

    if (entry) {
      p.x_max = p.x_max ? std::max(*p.x_max, *entry) : *entry;
      const auto [j, n] = pair_decode(*entry);
      if (p.recovering) {
        insert_sorted(p.recovered, *entry);
      } else if (j == 0) {
        p.min_zero = p.min_zero ? std::min(*p.min_zero, n) : n;
      } else if (j == 1) {
        p.recovering = true;
        p.cursor = 0;
        p.recovered.clear();
        if (p.min_zero) insert_sorted(p.recovered, pair_encode(0, *p.min_zero));
        insert_sorted(p.recovered, *p.x_max);
        insert_sorted(p.recovered, *entry);
      }
    }

    if (!p.recovering) {
      if (p.min_zero) {
        p.shape = DiagProgram::Shape::diag;
        p.diag_index = *p.min_zero;
      }
      return p;
    }

    const Natural limit = p.x_max.value_or(0);
    while (p.cursor < limit && std::binary_search(p.recovered.begin(), p.recovered.end(), p.cursor)) {
      ++p.cursor;
    }
    if (p.cursor < limit) {
      if (p.probes >= probe_cap) {
        throw ProbeOverflow("diagonal learner exceeded " + std::to_string(probe_cap) + " probes");
      }
      ++p.probes;
      p.shape = DiagProgram::Shape::probe;
      p.probe = p.cursor;
    } else {
      p.shape = DiagProgram::Shape::finite;
    }
    return p;
  };
  return g;
}

Generalizer gold_generalizer() {
  Generalizer g;
  g.name = "gold";
  g.initial = GoldProgram{};
  g.step = [](const Program& prev, const TraceEntry&, const Verdict& verdict) -> Program {
    const auto& p = as<GoldProgram>(prev, "gold");
    if (p.frozen && verdict.has_counterexample()) {
      throw InconsistentOracle("counterexample after the gold learner settled on " +
                               std::to_string(*p.removed));
    }
    if (p.frozen || verdict.is_none()) return p;
    return GoldProgram{verdict.counterexample(), true};
  };
  return g;
}

// ------------------------------------------------------------------ runs

std::string_view to_string(EngineVariant variant) {
  switch (variant) {
    case EngineVariant::cegis:
      return "cegis";
    case EngineVariant::mincegis:
      return "mincegis";
    case EngineVariant::hcegis:
      return "hcegis";
    case EngineVariant::simulated_mincegis:
      return "simulated-mincegis";
  }
  return "?";
}

std::optional<EngineVariant> parse_engine_variant(std::string_view name) {
  using V = EngineVariant;
  for (auto v : {V::cegis, V::mincegis, V::hcegis, V::simulated_mincegis}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Event event) {
  switch (event) {
    case Event::conjecture:
      return "conjecture";
    case Event::probe:
      return "probe";
    case Event::freeze:
      return "freeze";
  }
  return "?";
}

std::string_view to_string(SimCase c) {
  switch (c) {
    case SimCase::replay_known:
      return "replay-known";
    case SimCase::probe_start:
      return "probe-start";
    case SimCase::accept_subset:
      return "accept-subset";
    case SimCase::probe_hit:
      return "probe-hit";
    case SimCase::probe_advance:
      return "probe-advance";
  }
  return "?";
}

EngineRun run_with_oracle(EngineVariant label, const Family& family, const Trace& trace,
                          const Generalizer& generalizer, const Oracle& oracle,
                          std::size_t budget) {
  EngineRun run;
  run.variant = label;
  run.budget = budget;

  Program current = generalizer.initial;
  family.language(current);
  run.iterations.push_back({0, std::nullopt, current, std::nullopt, classify(current)});

  const std::size_t steps = std::min(budget, trace.size());
  for (std::size_t n = 1; n <= steps && !is_frozen(current); ++n) {
    const Verdict verdict = oracle(family.language(current), trace.prefix(n - 1));
    ++run.queries;
    Program next = generalizer.step(current, trace[n - 1], verdict);
    family.language(next);
    run.iterations.push_back({n, trace[n - 1], next, verdict, classify(next)});
    current = std::move(next);
  }
  run.halted = is_frozen(current);
  run.final = current;
  return run;
}

EngineRun run_engine(EngineVariant variant, const Family& family, const Language& target,
                     const Trace& trace, const Generalizer& generalizer,
                     const CexStrategy& strategy, std::size_t budget) {
  switch (variant) {
    case EngineVariant::cegis:
      return run_with_oracle(
          variant, family, trace, generalizer,
          [&](const Language& c, std::span<const TraceEntry>) { return check(c, target, strategy); },
          budget);
    case EngineVariant::mincegis:
      return run_with_oracle(
          variant, family, trace, generalizer,
          [&](const Language& c, std::span<const TraceEntry>) { return mincheck(c, target); },
          budget);
    case EngineVariant::hcegis:
      return run_with_oracle(
          variant, family, trace, generalizer,
          [&](const Language& c, std::span<const TraceEntry> h) { return hcheck(c, target, h); },
          budget);
    case EngineVariant::simulated_mincegis:
      return simulate_min_via_arbitrary(family, target, trace, generalizer, strategy, budget);
  }
  throw EngineFault("unknown engine variant");
}

// ------------------------------------------------------------------ simulation

LceMap::Entry LceMap::lookup(const Program& program) const {
  const auto it = entries_.find(program);
  if (it == entries_.end()) return Unknown{};
  return it->second;
}

void LceMap::store(const Program& program, const Verdict& verdict) {
  entries_.insert_or_assign(program, verdict);
}

std::variant<Program, ReplayUndefined> t_lce_replay(const LceMap& lce, const Program& start,
                                                    std::span<const TraceEntry> prefix,
                                                    const Generalizer& generalizer) {
  Program current = start;
  for (const TraceEntry& entry : prefix) {
    const auto it = lce.entries().find(current);
    if (it == lce.entries().end()) return ReplayUndefined{current};
    current = generalizer.step(current, entry, it->second);
  }
  return current;
}

MinCexSimulator::MinCexSimulator(const Family& family, const Language& target, const Trace& trace,
                                 const Generalizer& generalizer, CexStrategy strategy)
    : family_(family),
      target_(target),
      trace_(trace),
      generalizer_(generalizer),
      strategy_(std::move(strategy)) {
  const Natural bound = family.universe_bound();
  order_.reserve(bound + 1);
  for (Natural n = 0; n <= bound; ++n) order_.push_back(n);
  const Ordering ord = family.ordering();
  if (ord.kind() != Ordering::Kind::natural) {
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Natural a, Natural b) { return ord.less(a, b); });
  }

  state_.sim = generalizer.initial;
  state_.last = generalizer.initial;
  family.language(state_.sim);
  macro_.push_back({0, std::nullopt, state_.sim, std::nullopt, classify(state_.sim)});
  halted_ = is_frozen(state_.sim);
}

bool MinCexSimulator::finished() const {
  return halted_ || (next_ >= trace_.size() && state_.backlog.empty() && !state_.probing);
}

Language MinCexSimulator::candidate_language() const {
  if (state_.probing) return family_.language(state_.last).intersect_singleton(order_[state_.mu]);
  return family_.language(state_.sim);
}

std::string MinCexSimulator::candidate_name() const {
  if (state_.probing) {
    return family_.describe(state_.last) + " & {" + std::to_string(order_[state_.mu]) + "}";
  }
  return family_.describe(state_.sim);
}

void MinCexSimulator::replay_from(const Program& start) {
  Program current = start;
  std::size_t used = 0;
  while (used < state_.backlog.size() && !halted_) {
    const auto it = state_.lce.entries().find(current);
    if (it == state_.lce.entries().end()) break;
    const Verdict verdict = it->second;
    const TraceEntry entry = state_.backlog[used];
    Program next = generalizer_.step(current, entry, verdict);
    family_.language(next);
    macro_.push_back({macro_.size(), entry, next, verdict, classify(next)});
    current = std::move(next);
    ++used;
    halted_ = is_frozen(current);
  }
  state_.backlog.erase(state_.backlog.begin(),
                       state_.backlog.begin() + static_cast<std::ptrdiff_t>(used));
  state_.done_length += used;
  state_.sim = current;
  state_.last = current;
}

bool MinCexSimulator::step() {
  if (finished()) return false;

  MicroStep ms;
  ms.iter = micro_.size() + 1;
  ms.mu = state_.mu;
  ms.checked = candidate_name();
  const Verdict verdict = check(candidate_language(), target_, strategy_);
  ms.verdict = verdict;

  if (next_ < trace_.size()) {
    ms.consumed = true;
    ms.trace_entry = trace_[next_];
    state_.backlog.push_back(trace_[next_]);
    ++next_;
  }

  const std::size_t done_before = state_.done_length;
  if (!state_.probing) {
    const auto known = state_.lce.lookup(state_.sim);
    const Verdict* cached = std::get_if<Verdict>(&known);
    if (verdict.has_counterexample()) {
      if (cached != nullptr && cached->is_none()) {
        throw InconsistentOracle("candidate cached as a subset was refuted");
      }
      if (cached != nullptr) {
        ms.sim_case = SimCase::replay_known;
        replay_from(state_.sim);
      } else {
        ms.sim_case = SimCase::probe_start;
        state_.probing = true;
        state_.mu = 0;
        state_.last = state_.sim;
      }
    } else {
      if (cached != nullptr && cached->has_counterexample()) {
        throw InconsistentOracle("candidate with a cached counterexample was accepted");
      }
      ms.sim_case = SimCase::accept_subset;
      state_.lce.store(state_.sim, Verdict::none());
      replay_from(state_.sim);
    }
  } else if (verdict.has_counterexample()) {
    ms.sim_case = SimCase::probe_hit;
    state_.lce.store(state_.last, verdict);
    state_.probing = false;
    state_.mu = 0;
    replay_from(state_.last);
  } else {
    ms.sim_case = SimCase::probe_advance;
    if (++state_.mu >= order_.size()) {
      throw InconsistentOracle("refuted candidate " + family_.describe(state_.last) +
                               " has no counterexample in [0, B]");
    }
  }

  if (state_.done_length > done_before) {
    since_progress_ = 0;
  } else if (++since_progress_ > probe_cap() + 2) {
    throw std::logic_error("simulation stopped consuming the trace");
  }

  ms.candidate = candidate_name();
  ms.frozen = is_frozen(state_.sim);
  ms.done_length = state_.done_length;
  micro_.push_back(std::move(ms));
  return true;
}

EngineRun simulate_min_via_arbitrary(const Family& family, const Language& target,
                                     const Trace& trace, const Generalizer& generalizer,
                                     const CexStrategy& strategy, std::size_t budget) {
  MinCexSimulator sim(family, target, trace, generalizer, strategy);
  std::size_t used = 0;
  EngineRun run;
  run.variant = EngineVariant::simulated_mincegis;
  run.budget = budget;
  while (!sim.finished()) {
    if (used >= budget) {
      run.budget_exhausted = true;
      break;
    }
    sim.step();
    ++used;
  }
  run.iterations = sim.macro_steps();
  run.micro_steps = sim.micro_steps();
  run.final = run.iterations.back().candidate;
  run.halted = sim.halted();
  run.queries = run.micro_steps.size();
  return run;
}

}  // namespace cegis
