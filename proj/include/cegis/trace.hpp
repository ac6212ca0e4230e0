#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cegis/language.hpp"
#include "cegis/pairing.hpp"

namespace cegis {

/// One position of a presentation: an example, or the padding symbol when empty.
using TraceEntry = std::optional<Natural>;

/// Natural numbers occurring in a sequence of entries; padding is skipped.
std::set<Natural> smpl(std::span<const TraceEntry> entries);

/// A finite prefix of a presentation of positive examples.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<TraceEntry> entries, std::optional<std::string> target_hint = {})
      : entries_(std::move(entries)), target_hint_(std::move(target_hint)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const TraceEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<TraceEntry>& entries() const { return entries_; }

  /// The first k entries (all of them when k exceeds the length).
  std::span<const TraceEntry> prefix(std::size_t k) const;

  /// Bookkeeping for reports; engines never receive it.
  const std::optional<std::string>& target_hint() const { return target_hint_; }

 private:
  std::vector<TraceEntry> entries_;
  std::optional<std::string> target_hint_;
};

enum class Schedule {
  /// Members in ascending order, then the largest member repeated.
  canonical,
  /// Independent uniform draws from the members; no padding.
  seeded_random,
  /// Rounds of a seeded shuffle of all members with padding interleaved; every
  /// member appears at least once in every 2*|members| consecutive entries
  /// aligned to a round.
  padded_seeded,
};

std::string_view to_string(Schedule schedule);
std::optional<Schedule> parse_schedule(std::string_view name);

/// Throws EmptyLanguage for the canonical schedule over an empty language.
Trace trace_generate(const Language& language, Schedule schedule, Natural seed,
                     std::size_t length);

}  // namespace cegis
