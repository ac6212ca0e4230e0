#include "cegis/trace.hpp"

#include <algorithm>

#include "cegis/error.hpp"
#include "cegis/random.hpp"

namespace cegis {

std::set<Natural> smpl(std::span<const TraceEntry> entries) {
  std::set<Natural> out;
  for (const auto& e : entries) {
    if (e) out.insert(*e);
  }
  return out;
}

std::span<const TraceEntry> Trace::prefix(std::size_t k) const {
  return std::span<const TraceEntry>(entries_).first(std::min(k, entries_.size()));
}

std::string_view to_string(Schedule schedule) {
  switch (schedule) {
    case Schedule::canonical:
      return "canonical";
    case Schedule::seeded_random:
      return "seeded-random";
    case Schedule::padded_seeded:
      return "padded-seeded";
  }
  return "?";
}

std::optional<Schedule> parse_schedule(std::string_view name) {
  for (auto s : {Schedule::canonical, Schedule::seeded_random, Schedule::padded_seeded}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

Trace trace_generate(const Language& language, Schedule schedule, Natural seed,
                     std::size_t length) {
  const std::vector<Natural> members = language.members();
  std::vector<TraceEntry> out;
  out.reserve(length);

  switch (schedule) {
    case Schedule::canonical: {
      if (members.empty()) {
        throw EmptyLanguage("canonical trace requested for empty language " +
                            language.descriptor());
      }
      for (std::size_t i = 0; i < length; ++i) {
        out.emplace_back(members[std::min(i, members.size() - 1)]);
      }
      break;
    }
    case Schedule::seeded_random: {
      std::mt19937_64 rng(mix_seed(seed));
      for (std::size_t i = 0; i < length; ++i) {
        if (members.empty()) {
          out.emplace_back(std::nullopt);
        } else {
          out.emplace_back(members[uniform_below(rng, members.size())]);
        }
      }
      break;
    }
    case Schedule::padded_seeded: {
      std::mt19937_64 rng(mix_seed(seed));
      if (members.empty()) {
        out.assign(length, std::nullopt);
        break;
      }
      std::vector<Natural> round = members;
      while (out.size() < length) {
        seeded_shuffle(round, rng);
        for (Natural m : round) {
          if (out.size() < length && uniform_below(rng, 3) == 0) out.emplace_back(std::nullopt);
          if (out.size() < length) out.emplace_back(m);
        }
      }
      break;
    }
  }
  return Trace(std::move(out), language.descriptor());
}

}  // namespace cegis
