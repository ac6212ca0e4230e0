#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cegis/language.hpp"
#include "cegis/trace.hpp"

namespace cegis {

/// Answer of a subset query: no counterexample, or an element of the
/// candidate that the target lacks.
class Verdict {
 public:
  static Verdict none() { return Verdict(std::nullopt); }
  /// Throws InconsistentOracle unless e is in the candidate and not in the target.
  static Verdict counterexample(Natural e, const Language& candidate, const Language& target);

  bool is_none() const { return !cex_; }
  bool has_counterexample() const { return cex_.has_value(); }
  /// Precondition: has_counterexample().
  Natural counterexample() const { return *cex_; }
  const std::optional<Natural>& value() const { return cex_; }

  bool operator==(const Verdict&) const = default;

 private:
  explicit Verdict(std::optional<Natural> cex) : cex_(cex) {}
  std::optional<Natural> cex_;
};

/// How check() resolves its nondeterminism.
struct CexStrategy {
  enum class Kind { first_found, seeded_random, adversarial_max, consistent_avoiding };

  Kind kind = Kind::first_found;
  Natural seed = 0;
  /// Sorted; consulted only by consistent_avoiding.
  std::vector<Natural> avoid;

  static CexStrategy first_found() { return {}; }
  static CexStrategy seeded_random(Natural seed) { return {Kind::seeded_random, seed, {}}; }
  static CexStrategy adversarial_max() { return {Kind::adversarial_max, 0, {}}; }
  static CexStrategy consistent_avoiding(std::vector<Natural> avoid);

  bool operator==(const CexStrategy&) const = default;
};

std::string_view to_string(CexStrategy::Kind kind);
std::optional<CexStrategy::Kind> parse_strategy_kind(std::string_view name);

/// (candidate \ target) restricted to [0, B], ascending.
/// Throws std::invalid_argument when the universe bounds differ.
std::vector<Natural> difference(const Language& candidate, const Language& target);

/// Arbitrary-counterexample verifier. None iff candidate is a subset of the
/// target on [0, B]; otherwise the strategy picks from the difference.
/// consistent_avoiding throws StrategyInfeasible when every element of a
/// nonempty difference is in its avoid set.
Verdict check(const Language& candidate, const Language& target,
              const CexStrategy& strategy = CexStrategy::first_found());

/// Minimal-counterexample verifier under the candidate's ordering.
Verdict mincheck(const Language& candidate, const Language& target);

/// History-bounded verifier: the smallest m in the difference with
/// m < max(SMPL(history)); none when no such m exists.
Verdict hcheck(const Language& candidate, const Language& target,
               std::span<const TraceEntry> history);

}  // namespace cegis
