#pragma once

#include <cstdint>
#include <utility>

namespace cegis {

using Natural = std::uint64_t;

/// Cantor pairing: (a+b)(a+b+1)/2 + b.
///
/// Bijective on N x N and strictly increasing in each argument. Throws
/// InputTooLarge when the code does not fit in a Natural.
Natural pair_encode(Natural first, Natural second);

/// Inverse of pair_encode.
std::pair<Natural, Natural> pair_decode(Natural code);

/// Maps signed integers onto the naturals: 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
constexpr Natural zigzag_encode(std::int64_t v) {
  return (static_cast<Natural>(v) << 1) ^ static_cast<Natural>(v >> 63);
}

constexpr std::int64_t zigzag_decode(Natural u) {
  return static_cast<std::int64_t>(u >> 1) ^ -static_cast<std::int64_t>(u & 1);
}

/// A point of Z x Z carried as a single natural.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point&) const = default;
};

Natural point_encode(Point p);
Point point_decode(Natural code);

}  // namespace cegis
