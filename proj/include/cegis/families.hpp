#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cegis/language.hpp"
#include "cegis/program.hpp"

namespace cegis {

/// L_i = {n | n <= i} for i <= max_index: a strict chain L_0 < L_1 < ...
///
/// Programs may also denote L_{max_index + 1} (a learner overshooting the
/// largest target) and the universal language [0, B], with B = max_index + 2.
class ChainFamily final : public Family {
 public:
  explicit ChainFamily(Natural max_index = 64) : max_index_(max_index) {}

  std::string_view name() const override { return "chain"; }
  Natural universe_bound() const override { return max_index_ + 2; }
  Ordering ordering() const override { return Ordering::natural(); }
  Language language(const Program& program) const override;

  Natural max_index() const { return max_index_; }
  static bool template_value(Natural index, Natural n) { return n <= index; }

  /// Throws OutOfRange for i > max_index.
  Language chain_language(Natural i) const;
  Language universal() const;

 private:
  Language make(Natural i) const;
  Natural max_index_;
};

/// Rectangles [x_lo, x_hi] x [y_lo, y_hi] over the grid [-g, g]^2, with points
/// carried as pair codes of zigzagged coordinates and the radial ordering.
class RectangleFamily final : public Family {
 public:
  explicit RectangleFamily(std::int64_t grid = 32);

  std::string_view name() const override { return "rectangle"; }
  Natural universe_bound() const override { return bound_; }
  Ordering ordering() const override { return Ordering::radial(); }
  Language language(const Program& program) const override;
  std::optional<std::pair<std::int64_t, std::int64_t>> decode(Natural code) const override;

  std::int64_t grid() const { return grid_; }
  bool in_grid(Point p) const;

  /// Throws InvalidRectangle for inverted bounds or bounds outside the grid.
  Language rectangle_language(const Rect& r) const;
  /// The whole grid; the distinguished universal member.
  Rect universal_rect() const { return {-grid_, grid_, -grid_, grid_}; }
  Language universal() const { return rectangle_language(universal_rect()); }

 private:
  Language make(const Rect& r) const;
  std::int64_t grid_;
  Natural bound_;
};

/// Diagonal family over pair codes <j, n>:
///   fin:  finite sets with j in {0, 1} containing at least one <1, k>;
///   diag: {<0, n> | n in base(i)} with base(i) = {n | i <= n}.
/// Everything is truncated to codes <= B.
class DiagonalFamily final : public Family {
 public:
  explicit DiagonalFamily(Natural bound = 1024) : bound_(bound) {}

  std::string_view name() const override { return "diagonal"; }
  Natural universe_bound() const override { return bound_; }
  Ordering ordering() const override { return Ordering::natural(); }
  Language language(const Program& program) const override;
  std::optional<std::pair<std::int64_t, std::int64_t>> decode(Natural code) const override;

  /// Membership in base(i); min(base(i)) = i.
  static bool base_template(Natural index, Natural n) { return index <= n; }

  /// Throws OutOfRange when <0, i> exceeds the bound.
  Language diag_language(Natural i) const;
  /// Throws InvalidFamilyMember unless every j is 0 or 1 and some j is 1;
  /// OutOfRange when a code exceeds the bound.
  Language fin_language(const std::vector<std::pair<Natural, Natural>>& members) const;

 private:
  Language make_diag(Natural i) const;
  Language make_finite(std::vector<Natural> codes, std::string descriptor) const;
  std::string describe_codes(const std::vector<Natural>& codes) const;
  Natural bound_;
};

/// V* modelled as [0, B] together with V* - {i} for every i <= B.
class GoldFamily final : public Family {
 public:
  explicit GoldFamily(Natural bound = 64) : bound_(bound) {}

  std::string_view name() const override { return "gold"; }
  Natural universe_bound() const override { return bound_; }
  Ordering ordering() const override { return Ordering::natural(); }
  Language language(const Program& program) const override;

  Language full() const;
  /// Throws OutOfRange for i > B.
  Language minus(Natural i) const;

 private:
  Natural bound_;
};

}  // namespace cegis
