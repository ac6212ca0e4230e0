#include "cegis/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cegis/error.hpp"
#include "cegis/jsonlog.hpp"
#include "cegis/report.hpp"
#include "json.hpp"

namespace cegis::cli {

namespace {

namespace fs = std::filesystem;

template <typename T>
T to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    if constexpr (std::is_unsigned_v<T>) {
      if (v < 0) throw std::invalid_argument(s);
    }
    return static_cast<T>(v);
  } catch (const std::logic_error&) {
    throw ConfigError("malformed " + what + " '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

Language parse_target(const Family& family, const std::string& text) {
  if (text.empty()) throw ConfigError("no target given");
  if (const auto* chain = dynamic_cast<const ChainFamily*>(&family)) {
    if (text == "N" || text == "universal") return chain->universal();
    return chain->chain_language(to_int<Natural>(text, "chain target"));
  }
  if (const auto* rect = dynamic_cast<const RectangleFamily*>(&family)) {
    if (text == "universal") return rect->universal();
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw ConfigError("rectangle target needs x_lo,x_hi,y_lo,y_hi");
    return rect->rectangle_language({to_int<std::int64_t>(parts[0], "rectangle bound"),
                                     to_int<std::int64_t>(parts[1], "rectangle bound"),
                                     to_int<std::int64_t>(parts[2], "rectangle bound"),
                                     to_int<std::int64_t>(parts[3], "rectangle bound")});
  }
  if (const auto* diag = dynamic_cast<const DiagonalFamily*>(&family)) {
    if (starts_with(text, "diag:")) return diag->diag_language(to_int<Natural>(text.substr(5), "diag index"));
    if (starts_with(text, "fin:")) {
      std::vector<std::pair<Natural, Natural>> members;
      try {
        const auto j = nlohmann::json::parse(text.substr(4));
        if (!j.is_array()) throw ConfigError("fin target must be an array of [j,n] pairs");
        for (const auto& m : j) members.emplace_back(m.at(0).get<Natural>(), m.at(1).get<Natural>());
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed fin target: ") + e.what());
      }
      return diag->fin_language(members);
    }
    throw ConfigError("diagonal target must be diag:<i> or fin:[[j,n],...]");
  }
  if (const auto* gold = dynamic_cast<const GoldFamily*>(&family)) {
    if (text == "full") return gold->full();
    if (starts_with(text, "minus:")) return gold->minus(to_int<Natural>(text.substr(6), "gold index"));
    throw ConfigError("gold target must be full or minus:<i>");
  }
  throw ConfigError("unsupported family");
}

std::shared_ptr<const Family> make_family(const RunConfig& c) {
  if (c.family == "chain") {
    Natural cap = 64;
    if (c.universe_bound) {
      if (*c.universe_bound < 2) throw ConfigError("chain universe bound must be at least 2");
      cap = *c.universe_bound - 2;
    }
    return std::make_shared<ChainFamily>(cap);
  }
  if (c.family == "rectangle") {
    if (c.universe_bound) throw ConfigError("rectangle bound follows from --grid");
    return std::make_shared<RectangleFamily>(c.grid.value_or(32));
  }
  if (c.family == "diagonal" || c.family == "diag") {
    return std::make_shared<DiagonalFamily>(c.universe_bound.value_or(1024));
  }
  if (c.family == "gold") return std::make_shared<GoldFamily>(c.universe_bound.value_or(64));
  throw ConfigError("unknown family '" + c.family + "'");
}

Generalizer make_generalizer(const Family& family, EngineVariant engine, std::string name) {
  const std::string fam(family.name());
  if (name.empty()) {
    if (fam == "chain") {
      name = engine == EngineVariant::hcegis ? "chain-from-top" : "chain";
    } else {
      name = fam;
    }
  }
  if (fam == "chain") {
    const Natural top = dynamic_cast<const ChainFamily&>(family).max_index() + 1;
    if (name == "chain") return chain_generalizer(ChainStart::least, top);
    if (name == "chain-from-top") return chain_generalizer(ChainStart::universal, top);
  }
  if (fam == "rectangle" && name == "rectangle") {
    return rectangle_generalizer(dynamic_cast<const RectangleFamily&>(family).grid());
  }
  if (fam == "diagonal" && name == "diagonal") return diag_generalizer(family.universe_bound());
  if (fam == "gold" && name == "gold") return gold_generalizer();
  throw ConfigError("generalizer '" + name + "' does not fit the " + fam + " family");
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

fs::path prepare_dir(const std::string& configured) {
  const fs::path dir = output_dir(configured);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

int cmd_run(const RunConfig& config) {
  const RunOutcome outcome = execute(config);
  const fs::path dir = prepare_dir(config.out);
  write_file(dir / "run.jsonl", outcome.log);
  write_file(dir / "summary.json", outcome.summary);
  write_file(dir / "config.toml", to_config_text(config));
  if (outcome.run.variant == EngineVariant::simulated_mincegis) {
    write_file(dir / "micro.jsonl", outcome.micro_log);
  }
  std::cout << "verdict " << to_string(outcome.verdict) << ", semantic_match "
            << (outcome.verdict.semantic_match ? "true" : "false") << ", queries "
            << outcome.run.queries << ", final " << outcome.final_program << "\n";
  std::cout << "log written to " << (dir / "run.jsonl").string() << "\n";
  return outcome.exit_code;
}

int emit(const std::string& name, const RenderedReport& r, bool holds, const std::string& out) {
  const fs::path dir = prepare_dir(out);
  write_file(dir / (name + ".md"), r.markdown);
  write_file(dir / (name + ".json"), r.json);
  write_file(dir / (name + ".jsonl"), r.jsonl);
  std::cout << r.markdown;
  std::cout << "\n" << name << ": " << (holds ? "expected conclusion holds" : "expected conclusion FAILED")
            << " (reports in " << dir.string() << ")\n";
  return holds ? 0 : 1;
}

int cmd_demo(const std::string& name, Natural imax, std::size_t budget, const std::string& out) {
  if (name == "theorem1") {
    const EquivalenceReport r = demo_theorem1(shipped_equivalence_matrix());
    return emit(name, render(r), r.all_equal(), out);
  }
  if (name == "lemma1") {
    const SeparationReport r = demo_lemma1(imax, budget);
    return emit(name, render(r), r.holds, out);
  }
  if (name == "lemma2") {
    const Lemma2Report r = demo_lemma2(budget);
    return emit(name, render(r), r.hcegis.holds, out);
  }
  if (name == "rectangle") {
    const RectangleReport r = demo_rectangle({-1, 1, -1, 1}, 32, budget);
    return emit(name, render(r), r.holds, out);
  }
  if (name == "gold") {
    const GoldReport r = demo_gold(budget);
    return emit(name, render(r), r.holds, out);
  }
  throw ConfigError("unknown demo '" + name + "' (theorem1, lemma1, lemma2, rectangle, gold)");
}

}  // namespace

Setup resolve(const RunConfig& c) {
  const auto engine = parse_engine_variant(c.engine);
  if (!engine) throw ConfigError("unknown engine '" + c.engine + "'");
  const auto kind = parse_strategy_kind(c.strategy);
  if (!kind) throw ConfigError("unknown strategy '" + c.strategy + "'");
  const auto schedule = parse_schedule(c.schedule);
  if (!schedule) throw ConfigError("unknown schedule '" + c.schedule + "'");

  auto family = make_family(c);
  Language target = parse_target(*family, c.target);
  Generalizer gen = make_generalizer(*family, *engine, c.generalizer);

  CexStrategy strategy;
  switch (*kind) {
    case CexStrategy::Kind::first_found:
      strategy = CexStrategy::first_found();
      break;
    case CexStrategy::Kind::seeded_random:
      strategy = CexStrategy::seeded_random(c.seed);
      break;
    case CexStrategy::Kind::adversarial_max:
      strategy = CexStrategy::adversarial_max();
      break;
    case CexStrategy::Kind::consistent_avoiding:
      strategy = CexStrategy::consistent_avoiding(c.avoid);
      break;
  }

  const std::size_t budget = c.budget.value_or(default_budget(*family));
  const std::size_t window = c.window.value_or(default_window(target));
  if (window == 0) throw ConfigError("stability window must be at least 1");
  return Setup{family,   std::move(target), std::move(gen), *engine, std::move(strategy),
               *schedule, budget,           c.trace_length.value_or(budget), window};
}

RunOutcome execute(const RunConfig& config) {
  const Setup s = resolve(config);
  const bool simulated = s.engine == EngineVariant::simulated_mincegis;
  // The simulation consumes its whole trace; cap it at the budget so its
  // macro-steps line up with a direct run.
  const Trace trace = trace_generate(s.target, s.schedule, config.seed,
                                     simulated ? std::min(s.trace_length, s.budget) : s.trace_length);
  RunOutcome out;
  if (simulated) {
    const std::size_t micro = s.budget * static_cast<std::size_t>(s.family->universe_bound() + 3);
    out.run = simulate_min_via_arbitrary(*s.family, s.target, trace, s.generalizer, s.strategy, micro);
  } else {
    out.run = run_engine(s.engine, *s.family, s.target, trace, s.generalizer, s.strategy, s.budget);
  }
  out.verdict = convergence_verdict(*s.family, out.run, s.target, s.window);
  out.exit_code = exit_code(out.verdict);
  out.log = run_log(*s.family, out.run);
  out.micro_log = micro_log(*s.family, out.run);
  out.final_program = s.family->describe(out.run.final);
  out.summary = run_summary_json(*s.family, out.run, s.target, out.verdict, s.generalizer.name);
  return out;
}

int exit_code(const RunVerdict& verdict) {
  switch (verdict.status) {
    case RunStatus::converged:
      return verdict.semantic_match ? 0 : 4;
    case RunStatus::stalled:
      return 2;
    case RunStatus::budget_exhausted:
      return 3;
  }
  return 1;
}

std::string output_dir(const std::string& configured) {
  if (!configured.empty()) return configured;
  if (const char* env = std::getenv("CEGIS_LAB_LOG_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return "cegis-lab-out";
}

std::string comparison_table(const std::string& family_name) {
  std::vector<std::string> targets;
  if (family_name == "chain") {
    targets = {"0", "1", "3", "5"};
  } else if (family_name == "rectangle") {
    targets = {"-1,1,-1,1", "0,2,-1,3", "universal"};
  } else if (family_name == "diagonal" || family_name == "diag") {
    targets = {"diag:3", "fin:[[0,2],[0,5],[1,7]]"};
  } else if (family_name == "gold") {
    targets = {"full", "minus:17"};
  } else {
    throw ConfigError("unknown family '" + family_name + "'");
  }

  std::ostringstream md;
  md << "| target | engine | generalizer | verdict | match | queries | cex | final |\n";
  md << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& t : targets) {
    for (const char* engine : {"cegis", "mincegis", "hcegis", "simulated-mincegis"}) {
      RunConfig c;
      c.family = family_name;
      c.target = t;
      c.engine = engine;
      if (family_name == "rectangle") c.budget = 400;
      const Setup s = resolve(c);
      std::string verdict;
      std::string final_program;
      std::string match;
      std::string queries;
      std::string cex;
      try {
        const RunOutcome o = execute(c);
        verdict = to_string(o.verdict);
        match = o.verdict.semantic_match ? "yes" : "no";
        queries = std::to_string(o.run.queries);
        cex = std::to_string(count_counterexamples(o.run));
        final_program = s.family->describe(o.run.final);
      } catch (const Error& e) {
        verdict = std::string("error: ") + e.what();
      }
      md << "| " << s.target.descriptor() << " | " << engine << " | " << s.generalizer.name
         << " | " << verdict << " | " << match << " | " << queries << " | " << cex << " | "
         << final_program << " |\n";
    }
  }
  return md.str();
}

int main(int argc, char** argv) {
  CLI::App app{"Counterexample-guided inductive synthesis laboratory", "cegis-lab"};
  app.require_subcommand(1);

  RunConfig flags;
  std::string config_path;
  std::string avoid;
  Natural universe_bound = 0;
  std::int64_t grid = 0;
  std::size_t budget = 0;
  std::size_t trace_length = 0;
  std::size_t window = 0;

  auto* run = app.add_subcommand("run", "run one engine on one target");
  auto* demo = app.add_subcommand("demo", "run a packaged demonstration");
  auto* table = app.add_subcommand("table", "compare engine variants on one family");

  std::string demo_name;
  Natural imax = 20;
  demo->add_option("name", demo_name, "theorem1 | lemma1 | lemma2 | rectangle | gold")->required();
  demo->add_option("--imax", imax, "largest chain index for lemma1");
  demo->add_option("--budget", budget, "iteration budget (0 = demo default)");
  demo->add_option("--out", flags.out, "output directory");

  table->add_option("--family", flags.family, "chain | rectangle | diagonal | gold")->required();

  auto* o_family = run->add_option("--family", flags.family, "chain | rectangle | diagonal | gold");
  auto* o_target = run->add_option("--target", flags.target, "target language");
  auto* o_engine = run->add_option("--engine", flags.engine, "cegis | mincegis | hcegis | simulated-mincegis");
  auto* o_gen = run->add_option("--generalizer", flags.generalizer, "generalizer name");
  auto* o_strategy = run->add_option(
      "--strategy", flags.strategy, "first-found | seeded-random | adversarial-max | consistent-avoiding");
  auto* o_seed = run->add_option("--seed", flags.seed, "seed for traces and the random strategy");
  auto* o_schedule = run->add_option("--schedule", flags.schedule, "canonical | seeded-random | padded-seeded");
  auto* o_out = run->add_option("--out", flags.out, "output directory");
  auto* o_budget = run->add_option("--budget", budget, "iteration budget");
  auto* o_trace = run->add_option("--trace-length", trace_length, "trace length (default: budget)");
  auto* o_window = run->add_option("--window", window, "stability window");
  auto* o_bound = run->add_option("--universe-bound", universe_bound, "universe bound B");
  auto* o_grid = run->add_option("--grid", grid, "rectangle grid half-width");
  auto* o_avoid = run->add_option("--avoid", avoid, "comma-separated codes for consistent-avoiding");
  run->add_option("--config", config_path, "key = value config file; flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
      if (o_family->count()) config.family = flags.family;
      if (o_target->count()) config.target = flags.target;
      if (o_engine->count()) config.engine = flags.engine;
      if (o_gen->count()) config.generalizer = flags.generalizer;
      if (o_strategy->count()) config.strategy = flags.strategy;
      if (o_seed->count()) config.seed = flags.seed;
      if (o_schedule->count()) config.schedule = flags.schedule;
      if (o_out->count()) config.out = flags.out;
      if (o_budget->count()) config.budget = budget;
      if (o_trace->count()) config.trace_length = trace_length;
      if (o_window->count()) config.window = window;
      if (o_bound->count()) config.universe_bound = universe_bound;
      if (o_grid->count()) config.grid = grid;
      if (o_avoid->count()) {
        config.avoid.clear();
        for (const auto& part : split(avoid, ',')) config.avoid.push_back(to_int<Natural>(part, "avoid code"));
      }
      return cmd_run(config);
    }
    if (*demo) return cmd_demo(demo_name, imax, budget, flags.out);
    if (*table) {
      std::cout << comparison_table(flags.family);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "cegis-lab: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cegis::cli
