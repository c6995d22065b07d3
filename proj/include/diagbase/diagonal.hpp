#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "diagbase/catalog.hpp"
#include "diagbase/numeric.hpp"
#include "diagbase/perm.hpp"

namespace diagbase {

// A point of the k-th coset space: a k-tuple over T normalized so that the
// last coordinate is the identity. Two raw tuples describe the same point
// exactly when one is a constant left-translate of the other.
struct DiagPoint {
  std::vector<Point> coords;  // coords.back() == 0

  bool operator==(const DiagPoint&) const = default;
};

DiagPoint normalize_point(const AutAction& a, std::vector<Point> raw);
DiagPoint distinguished_point(std::uint64_t k);  // the all-identity point

// (phi_{u_1} alpha, ..., phi_{u_k} alpha) pi. The common-coset condition on
// the automorphism components is automatic in this encoding.
struct WElement {
  std::vector<Point> u;
  EIdx alpha = 0;
  Perm pi;
};

WElement w_identity(std::uint64_t k);
DiagPoint act(const AutAction& a, const WElement& w, const DiagPoint& p);
// Applies w1 first, then w2: act(w_mult(w1,w2), p) == act(w2, act(w1, p)).
WElement w_mult(const AutAction& a, const WElement& w1, const WElement& w2);

enum class TopGroup { kTrivial, kAlternating, kSymmetric };
std::string top_group_string(TopGroup t);
TopGroup top_group_from_string(const std::string& s);

// Choice of G = T^k.(O x P): a subgroup O of Out(T) given by its coset
// labels (must contain 0 and be closed), and the top group P.
struct GSelector {
  TopGroup top = TopGroup::kSymmetric;
  std::vector<unsigned> out_labels;  // empty means the full outer group

  static GSelector full() { return {TopGroup::kSymmetric, {}}; }
};

std::vector<unsigned> resolve_out_labels(const AutAction& a,
                                         const GSelector& sel);
std::string out_labels_string(const std::vector<unsigned>& labels);

// One batch of stabilizing elements sharing (alpha, c): the permutation
// components form a coset of the duplicate-column subgroup, described by
// per-position block ids (pi is admissible iff it maps every source block
// onto the paired target block).
struct StabRecord {
  EIdx alpha = 0;
  std::vector<Point> c;  // one translation constant per tuple row
  Perm pi0;              // block-wise order-preserving representative
  Int pi_count = 1;      // size of the pi coset
  bool blocks_nontrivial = false;  // some duplicate block has size >= 2
  std::vector<std::uint32_t> img_block;    // per position
  std::vector<std::uint32_t> shift_block;  // per position
};

bool coset_contains(const StabRecord& rec, const Perm& pi);
bool coset_contains_identity(const StabRecord& rec);

// All (alpha, c, pi) fixing every tuple, over the full automorphism group
// and the full symmetric top group; filter afterwards.
struct StabilizerScan {
  std::uint64_t k = 0;
  std::size_t rows = 0;
  std::vector<StabRecord> records;
};

// tuples[0] must be the distinguished (all-identity) point. Column-multiset
// hashing with a 64-bit row fingerprint prunes candidates; exact matching
// confirms every surviving one.
StabilizerScan pointwise_stabilizer_scan(const AutAction& a,
                                         const std::vector<DiagPoint>& tuples,
                                         unsigned threads = 0);

struct StabilizerDescription {
  Int order = 0;
  std::vector<StabRecord> records;  // records with a contribution under the filter
  bool any_odd_pi = false;
  bool any_transposition_pi = false;

  bool trivial() const { return order == 1; }
};

StabilizerDescription filter_stabilizer(const AutAction& a,
                                        const StabilizerScan& scan,
                                        const GSelector& sel);

StabilizerDescription pointwise_stabilizer(const AutAction& a,
                                           const std::vector<DiagPoint>& tuples,
                                           TopGroup top,
                                           unsigned threads = 0);

struct BaseCheck {
  bool is_base = false;
  StabilizerDescription stabilizer;
};

BaseCheck is_base(const AutAction& a, const std::vector<DiagPoint>& tuples,
                  const GSelector& sel, unsigned threads = 0);

// Exact minimal base size by depth-first search over stabilizer chains
// rooted at the distinguished point. Requires |T|^(k-1) <= omega_cap and
// k in {2, 3}.
unsigned brute_base_size(const AutAction& a, unsigned k, const GSelector& sel,
                         std::uint64_t omega_cap = 10'000);

// Number of regular point-stabilizer orbits. For the full group this
// delegates to the subset-orbit census when feasible; otherwise (and for
// proper subgroups) it enumerates the coset space directly.
std::uint64_t count_regular_suborbits(const AutAction& a, std::uint64_t k,
                                      const GSelector& sel,
                                      std::uint64_t subset_cap = 1'000'000,
                                      std::uint64_t omega_cap = 10'000,
                                      unsigned threads = 0);

// True iff the three setwise stabilizers of the blocks intersect trivially
// in <p_generators>. Blocks must partition {0..k-1} with distinct nonzero
// sizes.
bool distinguishing_partition_check(
    const std::vector<Perm>& p_generators,
    const std::array<std::vector<unsigned>, 3>& blocks,
    std::uint64_t cap = 1'000'000);

}  // namespace diagbase
