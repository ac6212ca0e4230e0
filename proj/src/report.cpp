#include "cegis/report.hpp"

#include <sstream>

#include "cegis/jsonlog.hpp"
#include "json.hpp"

namespace cegis {

namespace {

using Json = nlohmann::ordered_json;

Json verdict_json(const RunVerdict& v) {
  Json j = Json::object();
  j["status"] = std::string(to_string(v.status));
  j["converged_at"] = v.status == RunStatus::converged ? Json(v.converged_at) : Json(nullptr);
  j["semantic_match"] = v.semantic_match;
  return j;
}

Json row_json(const RunRow& r) {
  Json j = Json::object();
  j["target"] = r.target;
  j["variant"] = r.variant;
  j["label"] = r.label;
  j["verdict"] = to_string(r.verdict);
  j["semantic_match"] = r.verdict.semantic_match;
  j["queries"] = r.queries;
  j["expected_queries"] = r.expected_queries ? Json(*r.expected_queries) : Json(nullptr);
  j["counterexamples"] = r.counterexamples;
  j["final"] = r.final_program;
  j["log_digest"] = r.log_digest;
  return j;
}

Json equivalence_json(const EquivalenceRow& r) {
  Json j = Json::object();
  j["family"] = r.family;
  j["target"] = r.target;
  j["seed"] = r.seed;
  j["direct_final"] = r.direct_final;
  j["simulated_final"] = r.simulated_final;
  j["direct_verdict"] = to_string(r.direct_verdict);
  j["simulated_verdict"] = to_string(r.simulated_verdict);
  j["direct_semantic_match"] = r.direct_verdict.semantic_match;
  j["simulated_semantic_match"] = r.simulated_verdict.semantic_match;
  j["finals_equal"] = r.finals_equal;
  j["verdicts_match"] = r.verdicts_match;
  j["records_equal"] = r.records_equal;
  j["direct_queries"] = r.direct_queries;
  j["simulated_queries"] = r.simulated_queries;
  j["direct_digest"] = r.direct_digest;
  j["simulated_digest"] = r.simulated_digest;
  return j;
}

Json pair_json(const IndistinguishabilityReport& p) {
  Json j = Json::object();
  Json base = Json::array();
  for (const auto& e : p.instance.base_prefix) base.push_back(e ? Json(*e) : Json(nullptr));
  j["base_prefix"] = base;
  j["z1"] = p.instance.z1;
  j["z2"] = p.instance.z2;
  j["skipped"] = p.skipped;
  j["skip_reason"] = p.skip_reason;
  j["target_d"] = p.target_d;
  j["target_d_prime"] = p.target_d_prime;
  j["targets_differ"] = p.targets_differ;
  j["logs_identical"] = p.logs_identical;
  j["verdict_d"] = verdict_json(p.verdict_d);
  j["verdict_d_prime"] = verdict_json(p.verdict_d_prime);
  j["final"] = p.final_program;
  j["mismatched"] = p.mismatched;
  j["log_digest"] = digest_hex(p.log);
  return j;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string jsonl_of(const Json& lines) {
  std::string out;
  for (const auto& l : lines) out += l.dump() + "\n";
  return out;
}

std::string separation_markdown(const SeparationReport& r) {
  std::ostringstream md;
  md << "| target | variant | start | verdict | match | queries | cex | final |\n";
  md << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    md << "| " << row.target << " | " << row.variant << " | " << row.label << " | "
       << to_string(row.verdict) << " | " << yes(row.verdict.semantic_match) << " | "
       << row.queries;
    if (row.expected_queries) md << " (expected " << *row.expected_queries << ")";
    md << " | " << row.counterexamples << " | " << row.final_program << " |\n";
  }
  md << "\n" << r.conclusion << "\n";
  return md.str();
}

}  // namespace

RenderedReport render(const EquivalenceReport& report) {
  RenderedReport out;
  Json rows = Json::array();
  for (const auto& r : report.rows) rows.push_back(equivalence_json(r));

  Json doc = Json::object();
  doc["demo"] = "theorem1";
  doc["all_equal"] = report.all_equal();
  doc["rows"] = rows;
  out.json = doc.dump(2) + "\n";
  out.jsonl = jsonl_of(rows);

  std::size_t equal = 0;
  std::ostringstream md;
  md << "# Minimal vs arbitrary counterexamples\n\n";
  md << "| family | target | seed | direct | simulated | finals equal | verdicts match | "
        "records equal | queries (direct / simulated) |\n";
  md << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.rows) {
    if (r.finals_equal && r.verdicts_match && r.records_equal) ++equal;
    md << "| " << r.family << " | " << r.target << " | " << r.seed << " | "
       << to_string(r.direct_verdict) << " " << r.direct_final << " | "
       << to_string(r.simulated_verdict) << " " << r.simulated_final << " | "
       << yes(r.finals_equal) << " | " << yes(r.verdicts_match) << " | " << yes(r.records_equal)
       << " | " << r.direct_queries << " / " << r.simulated_queries << " |\n";
  }
  md << "\n" << equal << "/" << report.rows.size() << " pairs agree.\n";
  out.markdown = md.str();
  return out;
}

RenderedReport render(const SeparationReport& report) {
  RenderedReport out;
  Json rows = Json::array();
  for (const auto& r : report.rows) rows.push_back(row_json(r));

  Json doc = Json::object();
  doc["demo"] = report.name;
  doc["family"] = report.family;
  doc["holds"] = report.holds;
  doc["conclusion"] = report.conclusion;
  doc["rows"] = rows;
  out.json = doc.dump(2) + "\n";
  out.jsonl = jsonl_of(rows);
  out.markdown = "# Separation on the " + report.family + " family\n\n" + separation_markdown(report);
  return out;
}

RenderedReport render(const Lemma2Report& report) {
  RenderedReport out;
  Json rows = Json::array();
  for (const auto& r : report.hcegis.rows) rows.push_back(row_json(r));
  Json pairs = Json::array();
  for (const auto& p : report.pairs) pairs.push_back(pair_json(p));

  Json doc = Json::object();
  doc["demo"] = report.hcegis.name;
  doc["family"] = report.hcegis.family;
  doc["holds"] = report.hcegis.holds;
  doc["conclusion"] = report.hcegis.conclusion;
  doc["rows"] = rows;
  doc["pairs"] = pairs;
  out.json = doc.dump(2) + "\n";
  out.jsonl = jsonl_of(rows) + jsonl_of(pairs);

  std::ostringstream md;
  md << "# Separation on the " << report.hcegis.family << " family\n\n";
  md << "## History-bounded counterexamples\n\n" << separation_markdown(report.hcegis);
  md << "\n## Arbitrary counterexamples on crafted pairs\n\n";
  md << "| base | z1 | z2 | L^d | L^d' | logs identical | verdicts | final | status |\n";
  md << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& p : report.pairs) {
    std::string base;
    for (const auto& e : p.instance.base_prefix) {
      if (!base.empty()) base += " ";
      base += e ? std::to_string(*e) : "_";
    }
    md << "| " << base << " | " << p.instance.z1 << " | " << p.instance.z2 << " | " << p.target_d
       << " | " << p.target_d_prime << " | ";
    if (p.skipped) {
      md << " | | | skipped: " << p.skip_reason << " |\n";
    } else {
      md << yes(p.logs_identical) << " | " << to_string(p.verdict_d) << " / "
         << to_string(p.verdict_d_prime) << " | " << p.final_program << " | " << p.mismatched
         << " of 2 missed |\n";
    }
  }
  out.markdown = md.str();
  return out;
}

RenderedReport render(const GoldReport& report) {
  RenderedReport out;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json j = Json::object();
    j["target"] = r.target;
    j["verdict"] = verdict_json(r.verdict);
    j["conjectures"] = r.conjectures;
    j["conjecture_sequence"] = r.conjecture_sequence;
    j["ablation_verdict"] = verdict_json(r.ablation_verdict);
    j["ablation_matches_full"] = r.ablation_matches_full;
    rows.push_back(j);
  }
  Json doc = Json::object();
  doc["demo"] = "gold";
  doc["holds"] = report.holds;
  doc["rows"] = rows;
  out.json = doc.dump(2) + "\n";
  out.jsonl = report.log;

  std::ostringstream md;
  md << "# V* against V* - {x}\n\n";
  md << "| target | cegis | conjectures | without counterexamples |\n|---|---|---|---|\n";
  for (const auto& r : report.rows) {
    std::string seq;
    for (const auto& s : r.conjecture_sequence) seq += (seq.empty() ? "" : " -> ") + s;
    md << "| " << r.target << " | " << to_string(r.verdict) << " | " << seq << " | "
       << to_string(r.ablation_verdict) << " |\n";
  }
  out.markdown = md.str();
  return out;
}

RenderedReport render(const RectangleReport& report) {
  RenderedReport out;
  Json doc = Json::object();
  doc["demo"] = "rectangle";
  doc["target"] = Json::array(
      {report.target.x_lo, report.target.x_hi, report.target.y_lo, report.target.y_hi});
  doc["grid"] = report.grid;
  doc["first_cex"] = report.first_cex ? Json::array({report.first_cex->x, report.first_cex->y})
                                      : Json(nullptr);
  doc["first_cex_radius"] = report.first_cex_radius ? Json(*report.first_cex_radius)
                                                    : Json(nullptr);
  doc["verdict"] = verdict_json(report.verdict);
  doc["final"] = report.final_program;
  doc["queries"] = report.queries;
  doc["simulated_verdict"] = verdict_json(report.simulated_verdict);
  doc["simulated_equal"] = report.simulated_equal;
  doc["holds"] = report.holds;
  out.json = doc.dump(2) + "\n";
  out.jsonl = report.log;

  std::ostringstream md;
  md << "# Rectangle under minimal counterexamples\n\n";
  md << "- grid: +-" << report.grid << "\n";
  if (report.first_cex) {
    md << "- first counterexample: (" << report.first_cex->x << "," << report.first_cex->y
       << "), x^2+y^2 = " << *report.first_cex_radius << "\n";
  }
  md << "- verdict: " << to_string(report.verdict) << ", final " << report.final_program
     << ", match " << yes(report.verdict.semantic_match) << ", " << report.queries
     << " queries\n";
  md << "- simulation with arbitrary counterexamples: " << to_string(report.simulated_verdict)
     << ", same iterations " << yes(report.simulated_equal) << "\n";
  out.markdown = md.str();
  return out;
}

std::string run_summary_json(const Family& family, const EngineRun& run, const Language& target,
                             const RunVerdict& verdict, const std::string& generalizer) {
  Json j = Json::object();
  j["family"] = std::string(family.name());
  j["target"] = target.descriptor();
  j["engine"] = std::string(to_string(run.variant));
  j["generalizer"] = generalizer;
  j["verdict"] = to_string(verdict);
  j["status"] = std::string(to_string(verdict.status));
  j["converged_at"] =
      verdict.status == RunStatus::converged ? Json(verdict.converged_at) : Json(nullptr);
  j["final"] = family.describe(run.final);
  j["semantic_match"] = verdict.semantic_match;
  j["queries"] = run.queries;
  j["iterations"] = run.iterations.size() - 1;
  j["counterexamples"] = count_counterexamples(run);
  if (!run.micro_steps.empty() || run.variant == EngineVariant::simulated_mincegis) {
    j["micro_steps"] = run.micro_steps.size();
  }
  return j.dump(2) + "\n";
}

}  // namespace cegis
