#pragma once

#include <string>

#include "cegis/harness.hpp"

namespace cegis {

/// Rendered demo output: a Markdown report, a JSON document and JSON Lines.
struct RenderedReport {
  std::string markdown;
  std::string json;
  std::string jsonl;
};

RenderedReport render(const EquivalenceReport& report);
RenderedReport render(const SeparationReport& report);
RenderedReport render(const Lemma2Report& report);
RenderedReport render(const GoldReport& report);
RenderedReport render(const RectangleReport& report);

/// JSON for a single run: verdict, final, semantic_match, queries, iterations,
/// plus the run's identity.
std::string run_summary_json(const Family& family, const EngineRun& run, const Language& target,
                             const RunVerdict& verdict, const std::string& generalizer);

}  // namespace cegis
