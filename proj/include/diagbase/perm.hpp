#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace diagbase {

using Point = std::uint32_t;

// Dense permutation of {0,...,degree-1}. Composition applies the left factor
// first: compose(p, q)[i] == q[p[i]]. This left-action convention is fixed
// project-wide; every action formula is transcribed into it once.
class Perm {
 public:
  Perm() = default;
  // Validates that `images` is a bijection.
  explicit Perm(std::vector<Point> images);
  // Skips validation; for internal use where bijectivity holds by
  // construction.
  static Perm unchecked(std::vector<Point> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  std::uint64_t order() const;  // lcm of cycle lengths
  bool is_even() const;
  // "(0,1,2)(3,4)"; fixed points omitted; identity renders as "()".
  std::string cycle_string() const;

  std::uint64_t hash() const;

  bool operator==(const Perm&) const = default;
  std::strong_ordering operator<=>(const Perm& o) const {
    return images_ <=> o.images_;
  }

 private:
  std::vector<Point> images_;
};

// Applies p first, then q. Degrees must match.
Perm compose(const Perm& p, const Perm& q);

// Parses a 0-based cycle string such as "(0,1,2)(3,4)" on `degree` points.
Perm parse_cycles(const std::string& text, std::size_t degree);

}  // namespace diagbase
