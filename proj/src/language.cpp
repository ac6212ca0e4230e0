#include "cegis/language.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace cegis {

namespace {

auto radial_key(Natural code) {
  const Point p = point_decode(code);
  // Grid coordinates are small; the square cannot overflow for any code that
  // decodes from a 64-bit natural with |coordinate| < 2^31.
  const __int128 r = static_cast<__int128>(p.x) * p.x + static_cast<__int128>(p.y) * p.y;
  return std::tuple(r, p.x, p.y);
}

}  // namespace

std::string_view Ordering::name() const {
  return kind_ == Kind::natural ? "natural" : "radial";
}

bool Ordering::less(Natural a, Natural b) const {
  if (kind_ == Kind::natural) return a < b;
  return radial_key(a) < radial_key(b);
}

Language::Language(std::string descriptor, Natural universe_bound, Ordering ordering,
                   Predicate member, Enumerator enumerate) {
  if (!enumerate) {
    enumerate = [member, universe_bound](const Visitor& visit) {
      for (Natural n = 0; n <= universe_bound; ++n) {
        if (member(n)) visit(n);
      }
    };
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(descriptor), universe_bound, ordering,
                                            std::move(member), std::move(enumerate)});
}

Language Language::finite(std::string descriptor, Natural universe_bound, Ordering ordering,
                          std::vector<Natural> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members.erase(std::upper_bound(members.begin(), members.end(), universe_bound), members.end());
  auto shared = std::make_shared<const std::vector<Natural>>(std::move(members));
  return Language(
      std::move(descriptor), universe_bound, ordering,
      [shared](Natural n) { return std::binary_search(shared->begin(), shared->end(), n); },
      [shared](const Visitor& visit) {
        for (Natural n : *shared) visit(n);
      });
}

Language Language::singleton(Natural element, Natural universe_bound, Ordering ordering) {
  return finite("{" + std::to_string(element) + "}", universe_bound, ordering, {element});
}

Language Language::empty(Natural universe_bound, Ordering ordering) {
  return finite("{}", universe_bound, ordering, {});
}

void Language::for_each_member(const Visitor& visit) const { impl_->enumerate(visit); }

std::vector<Natural> Language::members() const {
  std::vector<Natural> out;
  for_each_member([&](Natural n) { out.push_back(n); });
  std::sort(out.begin(), out.end());
  return out;
}

bool Language::is_empty() const {
  bool any = false;
  for_each_member([&](Natural) { any = true; });
  return !any;
}

Language Language::intersect_singleton(Natural k) const {
  const bool inside = k <= universe_bound() && contains(k);
  std::vector<Natural> members;
  if (inside) members.push_back(k);
  return finite(descriptor() + " & {" + std::to_string(k) + "}", universe_bound(), ordering(),
                std::move(members));
}

bool same_members(const Language& a, const Language& b) {
  return is_subset(a, b) && is_subset(b, a);
}

bool is_subset(const Language& sub, const Language& sup) {
  bool ok = true;
  sub.for_each_member([&](Natural n) {
    if (ok && !sup.contains(n)) ok = false;
  });
  return ok;
}

}  // namespace cegis
