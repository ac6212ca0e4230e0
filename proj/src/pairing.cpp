#include "cegis/pairing.hpp"

#include <cmath>
#include <string>

#include "cegis/error.hpp"

namespace cegis {

namespace {

using Wide = unsigned __int128;

Wide triangle(Wide w) { return w * (w + 1) / 2; }

}  // namespace

Natural pair_encode(Natural first, Natural second) {
  Natural sum = 0;
  if (__builtin_add_overflow(first, second, &sum)) {
    throw InputTooLarge("pair_encode: " + std::to_string(first) + " + " +
                        std::to_string(second) + " overflows");
  }
  const Wide code = triangle(sum) + second;
  if (code > static_cast<Wide>(~Natural{0})) {
    throw InputTooLarge("pair_encode: code for (" + std::to_string(first) + ", " +
                        std::to_string(second) + ") overflows");
  }
  return static_cast<Natural>(code);
}

std::pair<Natural, Natural> pair_decode(Natural code) {
  // Largest w with T(w) <= code; the floating estimate is corrected exactly.
  auto w = static_cast<Wide>((std::sqrt(8.0 * static_cast<double>(code) + 1.0) - 1.0) / 2.0);
  while (w > 0 && triangle(w) > code) --w;
  while (triangle(w + 1) <= code) ++w;
  const auto second = static_cast<Natural>(code - triangle(w));
  const auto first = static_cast<Natural>(w - second);
  return {first, second};
}

Natural point_encode(Point p) { return pair_encode(zigzag_encode(p.x), zigzag_encode(p.y)); }

Point point_decode(Natural code) {
  const auto [a, b] = pair_decode(code);
  return {zigzag_decode(a), zigzag_decode(b)};
}

}  // namespace cegis
