#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cegis/cli.hpp"
#include "cegis/error.hpp"
#include "cegis/report.hpp"
#include "cegis/verifiers.hpp"

namespace py = pybind11;
using namespace cegis;

namespace {

Language finite_set(const std::vector<Natural>& members, Natural bound) {
  return Language::finite("set", bound, Ordering::natural(), members);
}

py::object verdict_value(const Verdict& v) {
  if (v.is_none()) return py::none();
  return py::int_(v.counterexample());
}

py::dict run(const std::string& family, const std::string& target, const std::string& engine,
             const std::string& generalizer, const std::string& strategy, Natural seed,
             std::optional<std::size_t> budget, std::optional<Natural> universe_bound,
             const std::string& schedule) {
  RunConfig c;
  c.family = family;
  c.target = target;
  c.engine = engine;
  c.generalizer = generalizer;
  c.strategy = strategy;
  c.seed = seed;
  c.budget = budget;
  c.universe_bound = universe_bound;
  c.schedule = schedule;
  const cli::RunOutcome o = cli::execute(c);

  py::dict d;
  d["verdict"] = to_string(o.verdict);
  d["status"] = std::string(to_string(o.verdict.status));
  d["semantic_match"] = o.verdict.semantic_match;
  d["final"] = o.final_program;
  d["queries"] = o.run.queries;
  d["iterations"] = o.run.iterations.size() - 1;
  d["exit_code"] = o.exit_code;
  d["log"] = o.log;
  return d;
}

py::dict demo(const std::string& name) {
  RenderedReport r;
  bool holds = false;
  if (name == "theorem1") {
    const auto rep = demo_theorem1(shipped_equivalence_matrix());
    holds = rep.all_equal();
    r = render(rep);
  } else if (name == "lemma1") {
    const auto rep = demo_lemma1();
    holds = rep.holds;
    r = render(rep);
  } else if (name == "lemma2") {
    const auto rep = demo_lemma2();
    holds = rep.hcegis.holds;
    r = render(rep);
  } else if (name == "rectangle") {
    const auto rep = demo_rectangle();
    holds = rep.holds;
    r = render(rep);
  } else if (name == "gold") {
    const auto rep = demo_gold();
    holds = rep.holds;
    r = render(rep);
  } else {
    throw ConfigError("unknown demo '" + name + "'");
  }
  py::dict d;
  d["holds"] = holds;
  d["markdown"] = r.markdown;
  d["json"] = r.json;
  d["jsonl"] = r.jsonl;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counterexample-guided inductive synthesis laboratory";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def("pair_encode", &pair_encode, py::arg("a"), py::arg("b"));
  m.def("pair_decode", &pair_decode, py::arg("code"));
  m.def("zigzag_encode", &zigzag_encode, py::arg("z"));
  m.def("zigzag_decode", &zigzag_decode, py::arg("n"));
  m.def("point_encode", [](std::int64_t x, std::int64_t y) { return point_encode({x, y}); });
  m.def("point_decode", [](Natural code) {
    const Point p = point_decode(code);
    return std::pair(p.x, p.y);
  });

  m.def(
      "check",
      [](const std::vector<Natural>& candidate, const std::vector<Natural>& target, Natural bound) {
        return verdict_value(check(finite_set(candidate, bound), finite_set(target, bound)));
      },
      py::arg("candidate"), py::arg("target"), py::arg("bound"),
      "Smallest counterexample of candidate against target on [0, bound], or None.");
  m.def(
      "mincheck",
      [](const std::vector<Natural>& candidate, const std::vector<Natural>& target, Natural bound) {
        return verdict_value(mincheck(finite_set(candidate, bound), finite_set(target, bound)));
      },
      py::arg("candidate"), py::arg("target"), py::arg("bound"));
  m.def(
      "hcheck",
      [](const std::vector<Natural>& candidate, const std::vector<Natural>& target, Natural bound,
         const std::vector<std::optional<Natural>>& history) {
        return verdict_value(hcheck(finite_set(candidate, bound), finite_set(target, bound), history));
      },
      py::arg("candidate"), py::arg("target"), py::arg("bound"), py::arg("history"));

  m.def("run", &run, py::arg("family"), py::arg("target"), py::arg("engine") = "cegis",
        py::arg("generalizer") = "", py::arg("strategy") = "first-found", py::arg("seed") = 0,
        py::arg("budget") = py::none(), py::arg("universe_bound") = py::none(),
        py::arg("schedule") = "canonical",
        "Run one engine on one target; returns verdict, final, semantic_match, queries, "
        "iterations, exit_code and the JSONL log.");
  m.def("demo", &demo, py::arg("name"),
        "Run a packaged demonstration; returns holds plus the Markdown, JSON and JSONL reports.");
}
