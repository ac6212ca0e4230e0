#include "cegis/families.hpp"

#include <algorithm>
#include <string>

#include "cegis/error.hpp"

namespace cegis {

namespace {

std::string rect_name(const Rect& r) {
  return "[" + std::to_string(r.x_lo) + "," + std::to_string(r.x_hi) + "]x[" +
         std::to_string(r.y_lo) + "," + std::to_string(r.y_hi) + "]";
}

std::string pair_name(Natural code) {
  const auto [j, n] = pair_decode(code);
  return "<" + std::to_string(j) + "," + std::to_string(n) + ">";
}

template <typename T>
const T& expect(const Program& program, std::string_view family) {
  const T* p = std::get_if<T>(&program);
  if (p == nullptr) {
    throw EngineFault("program of another family handed to the " + std::string(family) +
                      " family");
  }
  return *p;
}

}  // namespace

// ---------------------------------------------------------------- chain

Language ChainFamily::make(Natural i) const {
  const Natural bound = universe_bound();
  return Language(
      "L_" + std::to_string(i), bound, ordering(), [i](Natural n) { return template_value(i, n); },
      [i, bound](const Language::Visitor& visit) {
        for (Natural n = 0; n <= std::min(i, bound); ++n) visit(n);
      });
}

Language ChainFamily::chain_language(Natural i) const {
  if (i > max_index_) {
    throw OutOfRange("chain index " + std::to_string(i) + " exceeds cap " +
                     std::to_string(max_index_));
  }
  return make(i);
}

Language ChainFamily::universal() const {
  const Natural bound = universe_bound();
  return Language(
      "N", bound, ordering(), [](Natural) { return true; },
      [bound](const Language::Visitor& visit) {
        for (Natural n = 0; n <= bound; ++n) visit(n);
      });
}

Language ChainFamily::language(const Program& program) const {
  const auto& p = expect<ChainProgram>(program, name());
  if (!p.index) return universal();
  if (*p.index > max_index_ + 1) {
    throw EngineFault("chain program L_" + std::to_string(*p.index) +
                      " is beyond the representable range");
  }
  return make(*p.index);
}

// ---------------------------------------------------------------- rectangle

RectangleFamily::RectangleFamily(std::int64_t grid) : grid_(grid) {
  if (grid < 0) throw InvalidRectangle("negative grid bound");
  bound_ = pair_encode(zigzag_encode(grid), zigzag_encode(grid));
}

bool RectangleFamily::in_grid(Point p) const {
  return -grid_ <= p.x && p.x <= grid_ && -grid_ <= p.y && p.y <= grid_;
}

std::optional<std::pair<std::int64_t, std::int64_t>> RectangleFamily::decode(Natural code) const {
  const Point p = point_decode(code);
  return std::pair(p.x, p.y);
}

Language RectangleFamily::make(const Rect& r) const {
  if (r.is_empty()) return Language::finite("empty", bound_, ordering(), {});
  const std::int64_t g = grid_;
  return Language(
      rect_name(r), bound_, ordering(),
      [r, g](Natural code) {
        const Point p = point_decode(code);
        return -g <= p.x && p.x <= g && -g <= p.y && p.y <= g && r.contains(p);
      },
      [r](const Language::Visitor& visit) {
        for (std::int64_t x = r.x_lo; x <= r.x_hi; ++x) {
          for (std::int64_t y = r.y_lo; y <= r.y_hi; ++y) visit(point_encode({x, y}));
        }
      });
}

Language RectangleFamily::rectangle_language(const Rect& r) const {
  if (r.x_lo > r.x_hi || r.y_lo > r.y_hi) {
    throw InvalidRectangle("inverted rectangle " + rect_name(r));
  }
  if (!in_grid({r.x_lo, r.y_lo}) || !in_grid({r.x_hi, r.y_hi})) {
    throw InvalidRectangle("rectangle " + rect_name(r) + " leaves the grid of half-width " +
                           std::to_string(grid_));
  }
  return make(r);
}

Language RectangleFamily::language(const Program& program) const {
  const auto& p = expect<RectangleProgram>(program, name());
  if (p.bounds.is_empty()) return make(p.bounds);
  if (!in_grid({p.bounds.x_lo, p.bounds.y_lo}) || !in_grid({p.bounds.x_hi, p.bounds.y_hi})) {
    throw EngineFault("rectangle program " + rect_name(p.bounds) + " leaves the grid");
  }
  return make(p.bounds);
}

// ---------------------------------------------------------------- diagonal

std::optional<std::pair<std::int64_t, std::int64_t>> DiagonalFamily::decode(Natural code) const {
  const auto [j, n] = pair_decode(code);
  return std::pair(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n));
}

std::string DiagonalFamily::describe_codes(const std::vector<Natural>& codes) const {
  std::string out = "{";
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ",";
    out += pair_name(codes[i]);
  }
  return out + "}";
}

Language DiagonalFamily::make_diag(Natural i) const {
  const Natural bound = bound_;
  return Language(
      "diag(" + std::to_string(i) + ")", bound, ordering(),
      [i](Natural code) {
        const auto [j, n] = pair_decode(code);
        return j == 0 && base_template(i, n);
      },
      [i, bound](const Language::Visitor& visit) {
        for (Natural n = i;; ++n) {
          const Natural code = pair_encode(0, n);
          if (code > bound) break;
          visit(code);
        }
      });
}

Language DiagonalFamily::make_finite(std::vector<Natural> codes, std::string descriptor) const {
  return Language::finite(std::move(descriptor), bound_, ordering(), std::move(codes));
}

Language DiagonalFamily::diag_language(Natural i) const {
  if (pair_encode(0, i) > bound_) {
    throw OutOfRange("diag(" + std::to_string(i) + ") has no member below the bound " +
                     std::to_string(bound_));
  }
  return make_diag(i);
}

Language DiagonalFamily::fin_language(
    const std::vector<std::pair<Natural, Natural>>& members) const {
  bool has_one = false;
  std::vector<Natural> codes;
  for (const auto& [j, n] : members) {
    if (j > 1) {
      throw InvalidFamilyMember("fin member <" + std::to_string(j) + "," + std::to_string(n) +
                                "> has first coordinate outside {0,1}");
    }
    has_one = has_one || j == 1;
    const Natural code = pair_encode(j, n);
    if (code > bound_) {
      throw OutOfRange("fin member code " + std::to_string(code) + " exceeds the bound " +
                       std::to_string(bound_));
    }
    codes.push_back(code);
  }
  if (!has_one) throw InvalidFamilyMember("fin language needs at least one <1,k> member");
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return make_finite(codes, "fin" + describe_codes(codes));
}

Language DiagonalFamily::language(const Program& program) const {
  const auto& p = expect<DiagProgram>(program, name());
  switch (p.shape) {
    case DiagProgram::Shape::empty:
      return make_finite({}, "{}");
    case DiagProgram::Shape::diag:
      if (pair_encode(0, p.diag_index) > bound_) {
        throw EngineFault("diag(" + std::to_string(p.diag_index) + ") is beyond the bound");
      }
      return make_diag(p.diag_index);
    case DiagProgram::Shape::finite:
      if (!p.recovered.empty() && p.recovered.back() > bound_) {
        throw EngineFault("finite conjecture holds a code beyond the bound");
      }
      return make_finite(p.recovered, describe_codes(p.recovered));
    case DiagProgram::Shape::probe:
      if (p.probe > bound_) throw EngineFault("probe code beyond the bound");
      return make_finite({p.probe}, "probe" + describe_codes({p.probe}));
  }
  throw EngineFault("unknown diagonal program shape");
}

// ---------------------------------------------------------------- gold

Language GoldFamily::full() const {
  const Natural bound = bound_;
  return Language(
      "V*", bound, ordering(), [](Natural) { return true; },
      [bound](const Language::Visitor& visit) {
        for (Natural n = 0; n <= bound; ++n) visit(n);
      });
}

Language GoldFamily::minus(Natural i) const {
  if (i > bound_) {
    throw OutOfRange("gold index " + std::to_string(i) + " exceeds the bound " +
                     std::to_string(bound_));
  }
  const Natural bound = bound_;
  return Language(
      "V*-{" + std::to_string(i) + "}", bound, ordering(), [i](Natural n) { return n != i; },
      [i, bound](const Language::Visitor& visit) {
        for (Natural n = 0; n <= bound; ++n) {
          if (n != i) visit(n);
        }
      });
}

Language GoldFamily::language(const Program& program) const {
  const auto& p = expect<GoldProgram>(program, name());
  if (!p.removed) return full();
  if (*p.removed > bound_) throw EngineFault("gold program removes a point beyond the bound");
  return minus(*p.removed);
}

}  // namespace cegis
