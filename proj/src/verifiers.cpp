#include "cegis/verifiers.hpp"

#include <algorithm>
#include <stdexcept>

#include "cegis/error.hpp"
#include "cegis/random.hpp"

namespace cegis {

Verdict Verdict::counterexample(Natural e, const Language& candidate, const Language& target) {
  if (!candidate.contains(e) || target.contains(e)) {
    throw InconsistentOracle("unsound counterexample " + std::to_string(e) + " for " +
                             candidate.descriptor() + " against " + target.descriptor());
  }
  return Verdict(e);
}

CexStrategy CexStrategy::consistent_avoiding(std::vector<Natural> avoid) {
  std::sort(avoid.begin(), avoid.end());
  avoid.erase(std::unique(avoid.begin(), avoid.end()), avoid.end());
  return {Kind::consistent_avoiding, 0, std::move(avoid)};
}

std::string_view to_string(CexStrategy::Kind kind) {
  switch (kind) {
    case CexStrategy::Kind::first_found:
      return "first-found";
    case CexStrategy::Kind::seeded_random:
      return "seeded-random";
    case CexStrategy::Kind::adversarial_max:
      return "adversarial-max";
    case CexStrategy::Kind::consistent_avoiding:
      return "consistent-avoiding";
  }
  return "?";
}

std::optional<CexStrategy::Kind> parse_strategy_kind(std::string_view name) {
  using K = CexStrategy::Kind;
  for (auto k : {K::first_found, K::seeded_random, K::adversarial_max, K::consistent_avoiding}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<Natural> difference(const Language& candidate, const Language& target) {
  if (candidate.universe_bound() != target.universe_bound()) {
    throw std::invalid_argument("verifier languages disagree on the universe bound (" +
                                std::to_string(candidate.universe_bound()) + " vs " +
                                std::to_string(target.universe_bound()) + ")");
  }
  std::vector<Natural> out;
  candidate.for_each_member([&](Natural n) {
    if (!target.contains(n)) out.push_back(n);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Verdict check(const Language& candidate, const Language& target, const CexStrategy& strategy) {
  const std::vector<Natural> diff = difference(candidate, target);
  if (diff.empty()) return Verdict::none();

  Natural pick = diff.front();
  switch (strategy.kind) {
    case CexStrategy::Kind::first_found:
      break;
    case CexStrategy::Kind::seeded_random: {
      const Natural h = mix_seed(strategy.seed ^ mix_seed(diff.size() ^ mix_seed(diff.front())));
      pick = diff[h % diff.size()];
      break;
    }
    case CexStrategy::Kind::adversarial_max:
      pick = diff.back();
      break;
    case CexStrategy::Kind::consistent_avoiding: {
      const auto it = std::find_if(diff.begin(), diff.end(), [&](Natural n) {
        return !std::binary_search(strategy.avoid.begin(), strategy.avoid.end(), n);
      });
      if (it == diff.end()) {
        throw StrategyInfeasible("every counterexample for " + candidate.descriptor() +
                                 " lies in the avoid set");
      }
      pick = *it;
      break;
    }
  }
  return Verdict::counterexample(pick, candidate, target);
}

Verdict mincheck(const Language& candidate, const Language& target) {
  const std::vector<Natural> diff = difference(candidate, target);
  if (diff.empty()) return Verdict::none();
  const Ordering& order = candidate.ordering();
  const Natural best = *std::min_element(diff.begin(), diff.end(),
                                         [&](Natural a, Natural b) { return order.less(a, b); });
  return Verdict::counterexample(best, candidate, target);
}

Verdict hcheck(const Language& candidate, const Language& target,
               std::span<const TraceEntry> history) {
  const std::set<Natural> seen = smpl(history);
  const std::vector<Natural> diff = difference(candidate, target);
  if (seen.empty() || diff.empty()) return Verdict::none();
  // "below some history element" is the same as "below the largest one".
  if (diff.front() < *seen.rbegin()) return Verdict::counterexample(diff.front(), candidate, target);
  return Verdict::none();
}

}  // namespace cegis
