#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cegis/engines.hpp"

namespace cegis {

// JSON Lines logs. Keys appear in a fixed order so identical runs produce
// byte-identical text.
//
// Iteration line: iter, trace_entry, [trace_decoded], candidate, cex,
// [cex_decoded], verdict ("cex" | "none" | null on iteration 0), event.
// Pair-coded families add the *_decoded tuples. A non-empty `run` tag is
// written first.

std::string iteration_line(const Family& family, const IterationRecord& record,
                           std::string_view run = {});

/// Simulation micro-step line: iter, trace_entry, [trace_decoded], checked,
/// candidate, cex, [cex_decoded], verdict, case, mu, done, frozen.
std::string micro_line(const Family& family, const MicroStep& step);

/// One iteration line per record, each terminated by '\n'.
std::string run_log(const Family& family, const EngineRun& run, std::string_view tag = {});
std::string micro_log(const Family& family, const EngineRun& run);

std::uint64_t fnv1a(std::string_view text);
/// fnv1a as 16 lowercase hex digits.
std::string digest_hex(std::string_view text);

}  // namespace cegis
