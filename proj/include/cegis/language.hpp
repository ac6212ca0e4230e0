#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cegis/pairing.hpp"

namespace cegis {

/// Order used to pick "minimal" examples.
///
/// `natural` is the usual order on codes. `radial` decodes a code to a point
/// (x, y) and orders by x*x + y*y, breaking ties by x and then y, which makes
/// it total on codes.
class Ordering {
 public:
  enum class Kind { natural, radial };

  static Ordering natural() { return Ordering(Kind::natural); }
  static Ordering radial() { return Ordering(Kind::radial); }

  Kind kind() const { return kind_; }
  std::string_view name() const;
  bool less(Natural a, Natural b) const;

  bool operator==(const Ordering&) const = default;

 private:
  explicit Ordering(Kind kind) : kind_(kind) {}
  Kind kind_;
};

/// A decidable set of naturals with a declared universe bound B.
///
/// Membership is total; every question a verifier asks is restricted to
/// [0, B]. Languages are immutable and cheap to copy.
class Language {
 public:
  using Predicate = std::function<bool(Natural)>;
  using Visitor = std::function<void(Natural)>;
  /// Calls the visitor once for every member <= B, in any order.
  using Enumerator = std::function<void(const Visitor&)>;

  Language(std::string descriptor, Natural universe_bound, Ordering ordering, Predicate member,
           Enumerator enumerate = {});

  /// Members given explicitly; entries above the bound are dropped.
  static Language finite(std::string descriptor, Natural universe_bound, Ordering ordering,
                         std::vector<Natural> members);
  static Language singleton(Natural element, Natural universe_bound, Ordering ordering);
  static Language empty(Natural universe_bound, Ordering ordering);

  bool contains(Natural n) const { return impl_->member(n); }
  Natural universe_bound() const { return impl_->bound; }
  const Ordering& ordering() const { return impl_->ordering; }
  const std::string& descriptor() const { return impl_->descriptor; }

  void for_each_member(const Visitor& visit) const;
  /// Members <= B in ascending order.
  std::vector<Natural> members() const;
  bool is_empty() const;

  /// {k} intersected with this language.
  Language intersect_singleton(Natural k) const;

 private:
  struct Impl {
    std::string descriptor;
    Natural bound;
    Ordering ordering;
    Predicate member;
    Enumerator enumerate;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Agreement on every element of [0, B]; B is the larger of the two bounds.
bool same_members(const Language& a, const Language& b);

/// sub intersected with [0, B] is contained in sup.
bool is_subset(const Language& sub, const Language& sup);

}  // namespace cegis
