#pragma once

#include <memory>
#include <string>

#include "cegis/config.hpp"
#include "cegis/harness.hpp"

namespace cegis::cli {

/// A RunConfig with every name resolved and every default filled in.
struct Setup {
  std::shared_ptr<const Family> family;
  Language target;
  Generalizer generalizer;
  EngineVariant engine;
  CexStrategy strategy;
  Schedule schedule;
  std::size_t budget;
  std::size_t trace_length;
  std::size_t window;
};

/// Throws ConfigError for unknown names and malformed targets, and the family
/// errors (OutOfRange, InvalidRectangle, ...) for out-of-family targets.
Setup resolve(const RunConfig& config);

struct RunOutcome {
  EngineRun run;
  RunVerdict verdict;
  int exit_code = 1;
  std::string log;
  std::string micro_log;
  std::string summary;
  std::string final_program;
};

/// Runs the configured engine without touching the filesystem.
RunOutcome execute(const RunConfig& config);

/// 0 converged with a semantic match, 4 converged without one, 2 stalled,
/// 3 budget exhausted.
int exit_code(const RunVerdict& verdict);

/// Directory for outputs: config.out, else $CEGIS_LAB_LOG_DIR, else "cegis-lab-out".
std::string output_dir(const std::string& configured);

/// Markdown comparison of every engine variant on a few targets of `family`.
std::string comparison_table(const std::string& family);

/// Entry point of `cegis-lab`; configuration and runtime errors return 1.
int main(int argc, char** argv);

}  // namespace cegis::cli
