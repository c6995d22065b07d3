#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagbase/perm.hpp"

namespace diagbase {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element index within a GroupTable.
using EIdx = std::uint32_t;

struct ConjClasses {
  std::vector<EIdx> class_reps;              // smallest element index per class
  std::vector<std::uint32_t> class_of;       // element index -> class id
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::vector<EIdx>> members;    // per class, ascending
};

// An enumerated finite permutation group. Element 0 is the identity and the
// indexing is the insertion order of a breadth-first closure over the sorted
// generator list, so indices are reproducible across runs. Immutable after
// construction; all queries are safe to run concurrently.
class GroupTable {
 public:
  GroupTable() = default;  // empty; assign from enumerate() before use

  // Breadth-first product closure. Throws CapExceeded (leaving no partial
  // table behind) if the group order would exceed `cap`. An empty generator
  // list yields the trivial group on `degree_if_empty` points.
  static GroupTable enumerate(std::vector<Perm> generators, std::uint64_t cap,
                              std::size_t degree_if_empty = 1);

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Perm& perm(EIdx i) const { return elements_[i]; }
  const std::vector<EIdx>& generator_indices() const { return generator_indices_; }

  std::optional<EIdx> find(const Perm& p) const;
  EIdx index_of(const Perm& p) const;  // throws if absent

  EIdx mult(EIdx a, EIdx b) const;  // index of "apply a, then b"
  EIdx inv(EIdx a) const { return inverse_[a]; }
  std::uint64_t order_of(EIdx a) const { return orders_[a]; }
  EIdx conj(EIdx x, EIdx g) const { return mult(mult(inv(g), x), g); }

  std::vector<EIdx> centralizer(EIdx x) const;
  ConjClasses conjugacy_classes() const;

  // Closure of the given elements inside this group; ascending indices.
  std::vector<EIdx> subgroup_elements(const std::vector<EIdx>& seeds) const;
  std::uint64_t subgroup_order(const std::vector<EIdx>& seeds) const;

  // True iff <x, y^h> is the whole group for every h (equivalently, every
  // pair of conjugates of x and y generates).
  bool is_invariable_pair(EIdx x, EIdx y) const;

  // Classes met by {ab : a in c1, b in c2}.
  std::set<std::uint32_t> class_product_coverage(const ConjClasses& cc,
                                                 std::uint32_t c1,
                                                 std::uint32_t c2) const;

  // Every normal closure of a non-identity class representative is the whole
  // group. O(#classes) subgroup closures.
  bool is_simple() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<EIdx> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<EIdx> generator_indices_;
  std::unordered_map<std::uint64_t, std::vector<EIdx>> index_;
  // Dense multiplication table, only materialized when size^2 is small;
  // otherwise mult() composes permutations and looks the product up. Keeps
  // memory bounded for |G| around 10^4.
  std::vector<EIdx> cayley_;
  bool has_cayley_ = false;
};

}  // namespace diagbase
