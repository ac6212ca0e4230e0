#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cegis/language.hpp"
#include "cegis/pairing.hpp"

namespace cegis {

/// Axis-aligned box over Z x Z. Inverted bounds denote the empty box.
struct Rect {
  std::int64_t x_lo = 0;
  std::int64_t x_hi = 0;
  std::int64_t y_lo = 0;
  std::int64_t y_hi = 0;

  bool is_empty() const { return x_lo > x_hi || y_lo > y_hi; }
  bool contains(Point p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  auto operator<=>(const Rect&) const = default;
};

// Programs are plain values. Besides the conjecture itself each alternative
// carries the bounded auxiliary state its generalizer needs; verifiers only
// ever see the language a program denotes.

struct ChainProgram {
  /// Index i of L_i = {n <= i}; empty for the universal language.
  std::optional<Natural> index;
  bool frozen = false;
  auto operator<=>(const ChainProgram&) const = default;
};

struct RectangleProgram {
  Rect bounds;
  /// Bounding box of the positive examples observed so far.
  std::optional<Rect> hull;
  auto operator<=>(const RectangleProgram&) const = default;
};

struct DiagProgram {
  enum class Shape : std::uint8_t { empty, diag, finite, probe };

  Shape shape = Shape::empty;
  Natural diag_index = 0;
  Natural probe = 0;

  std::optional<Natural> min_zero;  // least n with <0, n> observed
  std::optional<Natural> x_max;     // largest code observed
  bool recovering = false;          // some <1, k> observed
  Natural cursor = 0;               // next code whose membership is unknown
  Natural probes = 0;               // singleton probes issued so far
  std::vector<Natural> recovered;   // sorted known members

  auto operator<=>(const DiagProgram&) const = default;
};

struct GoldProgram {
  /// Element removed from V*; empty for V* itself.
  std::optional<Natural> removed;
  bool frozen = false;
  auto operator<=>(const GoldProgram&) const = default;
};

using Program = std::variant<ChainProgram, RectangleProgram, DiagProgram, GoldProgram>;

/// A frozen program is a fixpoint of its generalizer; engines stop there.
bool is_frozen(const Program& program);
/// True for the diagonal learner's singleton membership probes.
bool is_probe(const Program& program);

/// An indexed family together with the interpretation of its programs.
class Family {
 public:
  virtual ~Family() = default;

  virtual std::string_view name() const = 0;
  /// Any two distinct member languages differ on some element <= this bound.
  virtual Natural universe_bound() const = 0;
  virtual Ordering ordering() const = 0;

  /// L(P). Throws EngineFault for programs outside the representable set.
  virtual Language language(const Program& program) const = 0;

  /// Human-readable identity of the conjecture (auxiliary state omitted).
  virtual std::string describe(const Program& program) const;

  /// Pair-coded families decode examples for logs; plain families return nothing.
  virtual std::optional<std::pair<std::int64_t, std::int64_t>> decode(Natural) const {
    return std::nullopt;
  }
};

/// Languages agree on [0, B].
bool semantically_equal(const Family& family, const Program& a, const Program& b);

}  // namespace cegis
