#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "diagbase/diagonal.hpp"
#include "diagbase/holomorph.hpp"

namespace diagbase {

struct PairWitness {
  EIdx x = 0;
  EIdx y = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::vector<std::string> detail;
};

using PairResult = std::variant<PairWitness, SearchFailure>;

// Searches for s, t in T with trivial joint centralizer in K = Inn(T).O and
// no simultaneous inverter in K; such a pair closes a size-3 base at k = 2.
// Seeded sampling first; when the pair space is small enough the failure is
// then proved by a deterministic scan over orbit representatives.
PairResult k2_find_pair(const AutAction& a, const GSelector& sel,
                        std::uint64_t seed, std::uint64_t budget);

// Partition of the k positions into blocks labelled by T elements. Blocks
// occupy consecutive position ranges in element-index order.
struct TPartition {
  unsigned ell = 2;
  std::uint64_t k = 0;
  std::vector<std::uint64_t> block_size;   // per element index
  std::vector<std::uint64_t> block_start;  // prefix sums of block_size
  std::vector<Point> core;                 // the equal-largest-share set S
  Point anchor = 0;                        // non-identity block of size 1 or Q-1
  SubsetWitness core_witness;

  std::uint64_t quota() const;  // |T|^(ell-1)
};

// Builds a partition with (P1) every block at most |T|^(ell-1), (P2) a
// non-empty identity block whose size-class S has trivial holomorph
// stabilizer, and (P3) a non-identity block of size 1 or |T|^(ell-1)-1.
// Requires |T|^(ell-1) < k <= |T|^ell - 3 and ell >= 2.
TPartition build_partition(const AutAction& a, unsigned ell, std::uint64_t k,
                           std::uint64_t seed = 1, std::uint64_t budget = 20000);

// Machine-checks P1-P3; the core's stabilizer is re-verified exhaustively.
void validate_partition(const AutAction& a, const TPartition& part);

struct BaseCandidate {
  std::string group;
  unsigned ell = 2;
  std::uint64_t k = 0;
  std::vector<std::vector<Point>> rows;  // the distinguished point is implicit
  std::string provenance;
  std::vector<std::string> detail;
};

std::vector<DiagPoint> candidate_tuples(const AutAction& a,
                                        const BaseCandidate& cand);

// Size-(ell+1) candidate from a partition: row 0 is constant on blocks, the
// remaining rows enumerate |T|^(ell-1) vectors inside each block with the
// all-identity vector anchored to the position the size-1 / quota-minus-1
// block dictates.
BaseCandidate build_base_main(const AutAction& a, const TPartition& part);

struct EdgeRefusal {
  std::string tag;  // machine-readable reason code
  std::string description;
};

using EdgeResult = std::variant<BaseCandidate, EdgeRefusal>;

// Boundary sizes k in {|T|^ell - 2, |T|^ell - 1, |T|^ell}. Returns a
// verified size-(ell+1) candidate when one exists for the selected group,
// and a tagged refusal when the minimum is ell+2. Refusal tags:
//   k-equals-order                          (k = |T|)
//   symmetric-top-at-boundary               (k in {|T|-2, |T|^l-1, |T|^l}, S_k <= G)
//   a5-a6-full-group-order-squared-minus-2  (k = |T|^2-2, T in {A5, A6}, G full)
EdgeResult build_base_edge(const AutAction& a, unsigned ell, std::uint64_t k,
                           const GSelector& sel, std::uint64_t seed = 1,
                           std::uint64_t budget = 20000);

// True iff some odd s with 3 <= s <= k is coprime to the order of every
// element of Out(T); then any giant-top group contains the alternating top.
bool giant_top_group_check(const AutAction& a, std::uint64_t k);

}  // namespace diagbase
