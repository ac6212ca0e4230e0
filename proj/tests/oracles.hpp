#pragma once

// Brute-force reference implementations shared by the unit tests and the
// acceptance binary. Nothing here calls into the verifiers under test.

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "cegis/families.hpp"
#include "cegis/verifiers.hpp"

namespace oracle {

using cegis::Language;
using cegis::Natural;
using cegis::TraceEntry;

inline std::vector<Natural> brute_difference(const Language& c, const Language& t) {
  std::vector<Natural> out;
  for (Natural n = 0; n <= c.universe_bound(); ++n) {
    if (c.contains(n) && !t.contains(n)) out.push_back(n);
  }
  return out;
}

inline std::tuple<std::int64_t, std::int64_t, std::int64_t> radial_key(Natural code) {
  const cegis::Point p = cegis::point_decode(code);
  return {p.x * p.x + p.y * p.y, p.x, p.y};
}

inline Natural brute_minimum(const std::vector<Natural>& diff, bool radial) {
  Natural best = diff.front();
  for (Natural n : diff) {
    if (radial ? radial_key(n) < radial_key(best) : n < best) best = n;
  }
  return best;
}

inline cegis::Rect random_rect(std::mt19937_64& rng, std::int64_t g) {
  std::uniform_int_distribution<std::int64_t> d(-g, g);
  const std::int64_t a = d(rng), b = d(rng), c = d(rng), e = d(rng);
  return {std::min(a, b), std::max(a, b), std::min(c, e), std::max(c, e)};
}

inline Language random_chain(const cegis::ChainFamily& f, std::mt19937_64& rng) {
  const Natural i = rng() % (f.max_index() + 2);
  return i > f.max_index() ? f.universal() : f.chain_language(i);
}

inline Language random_diag(const cegis::DiagonalFamily& f, std::mt19937_64& rng) {
  if (rng() % 2 == 0) return f.diag_language(rng() % 20);
  std::vector<std::pair<Natural, Natural>> members{{1, rng() % 20}};
  const std::size_t extra = rng() % 6;
  for (std::size_t k = 0; k < extra; ++k) members.emplace_back(rng() % 2, rng() % 25);
  return f.fin_language(members);
}

inline Language random_gold(const cegis::GoldFamily& f, std::mt19937_64& rng) {
  const Natural i = rng() % (f.universe_bound() + 2);
  return i > f.universe_bound() ? f.full() : f.minus(i);
}

inline std::vector<TraceEntry> random_history(const Language& target, std::mt19937_64& rng) {
  std::vector<TraceEntry> h;
  const auto members = target.members();
  const std::size_t len = rng() % 8;
  for (std::size_t k = 0; k < len; ++k) {
    if (members.empty() || rng() % 4 == 0) {
      h.push_back(std::nullopt);
    } else {
      h.push_back(members[rng() % members.size()]);
    }
  }
  return h;
}

/// Empty when check, mincheck and hcheck agree with brute force on the pair;
/// otherwise a description of the first disagreement.
inline std::string verifier_disagreement(const Language& c, const Language& t,
                                         const std::vector<TraceEntry>& history) {
  const std::string who = c.descriptor() + " vs " + t.descriptor() + ": ";
  const auto diff = brute_difference(c, t);
  if (cegis::difference(c, t) != diff) return who + "difference";

  const cegis::Verdict v = cegis::check(c, t);
  if (v.is_none() != diff.empty()) return who + "check none";
  if (v.has_counterexample() &&
      (!c.contains(v.counterexample()) || t.contains(v.counterexample()))) {
    return who + "check unsound";
  }

  const cegis::Verdict m = cegis::mincheck(c, t);
  if (m.is_none() != diff.empty()) return who + "mincheck none";
  const bool radial = c.ordering().kind() == cegis::Ordering::Kind::radial;
  if (!diff.empty() && m.counterexample() != brute_minimum(diff, radial)) {
    return who + "mincheck minimum";
  }

  std::optional<Natural> hmax;
  for (const auto& e : history) {
    if (e) hmax = std::max(hmax.value_or(0), *e);
  }
  const cegis::Verdict h = cegis::hcheck(c, t, history);
  if (h.has_counterexample()) {
    if (!hmax || h.counterexample() >= *hmax) return who + "hcheck above history";
    if (!c.contains(h.counterexample()) || t.contains(h.counterexample())) {
      return who + "hcheck unsound";
    }
  } else if (hmax && !diff.empty() && diff.front() < *hmax) {
    return who + "hcheck missed a counterexample below the history";
  }
  return {};
}

}  // namespace oracle
