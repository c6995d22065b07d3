#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "diagbase/catalog.hpp"
#include "diagbase/numeric.hpp"

namespace diagbase {

// Cycle shape [r^m, 1^fixed] of a prime-order permutation of T.
struct CycleShape {
  std::uint64_t r = 2;   // prime
  std::uint64_t m = 0;   // number of r-cycles
  std::uint64_t fixed = 0;

  std::uint64_t domain() const { return r * m + fixed; }
};

// Exact number of k-subsets fixed by a permutation of the given shape:
// a fixed subset is a union of whole cycles.
Int fix_count(const CycleShape& shape, std::uint64_t k);

// Upper bound sum_{u<=k/r} C(floor(|T|/r), u) C(h, k-ru); valid for any
// prime-order element with at most h fixed points.
Int fix_upper(std::uint64_t r, std::uint64_t t_order, std::uint64_t h,
              std::uint64_t k);

// Multiset of cycle shapes of the prime-order elements of Hol(T), keyed by
// (prime, fixed-point count).
struct ShapeCensus {
  std::uint64_t t_order = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Int> by_r_fixed;

  Int element_count() const;
};

// Exact census over all prime-order elements of Hol(T). Iterates prime-order
// automorphisms and, per automorphism, classifies all |T| translation parts
// at once through a fixed-point histogram.
ShapeCensus hol_prime_order_census(const AutAction& a, unsigned threads = 0);

// sum over prime-order sigma of |fix(sigma, P_k)|, from the census.
Int census_fix_sum(const ShapeCensus& census, std::uint64_t k);

// C(|T|,k) > 2 * sum_sigma |fix(sigma, P_k)|; "holds" certifies at least two
// regular orbits of Hol(T) on k-subsets. If the census work |Aut(T)| * |T|
// exceeds census_cap, the right side falls back to the per-prime upper
// bound 2 |Hol(T)| max_r fix_upper(r, |T|, h, k), flagged in the report;
// a fallback "holds" still certifies, a fallback "fails" does not refute.
BoundReport prob_ori_exact(const AutAction& a, std::uint64_t k,
                           unsigned threads = 0,
                           std::uint64_t census_cap = 4'000'000'000ULL);

// C(|T|,k) > m * sum_sigma |fix(sigma, P_k)|; "holds" certifies that the
// proportion of k-subsets of T# with non-trivial automorphism stabilizer is
// below 1/m. Throws CapExceeded when the census work exceeds census_cap.
BoundReport qk_union_bound(const AutAction& a, std::uint64_t k, const Int& m,
                           unsigned threads = 0,
                           std::uint64_t census_cap = 4'000'000'000ULL);

// C(|T|,k) > 2|Hol(T)| sum_{u<=k/2} C(floor(|T|/2),u) C(h,k-2u), for
// 5 <= k <= floor(4 log2 |T|). Exact integers on both sides.
BoundReport prob_check(const Int& t_order, const Int& out_order, const Int& h,
                       std::uint64_t k);

// The weak per-u criterion and the two derived closed-form criteria. Each
// report in the returned set carries its own verdict.
//   e:prob_u_weak   2^u u^u |T|^(k-u) > 2|Hol| floor(k/2) k^(2u) e^(k+u) h^(k-2u)
//                   for every u in {0..floor(k/2)} (reported per-u and overall)
//   e:prob_u=k/2    |T|^k0 > |Hol|^2 k0^(2+k0) e^(3k0), with h^2 < k0 |T|
//   e:prob_u=0      |T|^k0 > 2|Hol| floor(k0/2) e^k0 h^k0, with
//                   2h^2 > (4 log2 |T|)^2 e |T|
std::vector<BoundReport> prob_u_criteria(const Int& t_order,
                                         const Int& hol_order, const Int& h,
                                         std::uint64_t k, std::uint64_t k0);

// Alternating-group instance of the u=0 criterion:
// (n(n-1)/(2e))^n > n (n!)^2 / 2.
BoundReport alternating_u0_inequality(std::uint64_t n);

// Q1 + Q2 < 1/2 with
//   Q1 = (k!)^2 |T|^(8/3 - k/2 - [k=5]/2) + k!/|T|^(4/3) + k^4/(2|T|^(1/3))
//   Q2 = (|T|/h)^(4-k) + C(k,2) |Out| (|T|/h)^(3-k)
// for 5 <= k <= floor(4 log2 |T|).
BoundReport q1q2(const Int& t_order, const Int& out_order, const Int& h,
                 std::uint64_t k);

// Both sides of e^{-1/(8l)} a(l,m,n) < C(nl, ml) < a(l,m,n) with
// a(l,m,n) = (2 pi)^{-1/2} l^{-1/2} (n/((n-m)m))^{1/2}
//            (n^n/((n-m)^{n-m} m^m))^l.
struct SandwichReport {
  BoundReport lower;  // e^{-1/(8l)} a < C
  BoundReport upper;  // C < a
  bool both_hold() const;
};
SandwichReport binom_sandwich(std::uint64_t ell, std::uint64_t m,
                              std::uint64_t n);

enum class TopClass { kNonGiant, kGiant };

struct BaseSizeQuery {
  Int t_order;
  Int k;
  TopClass top = TopClass::kGiant;
  bool contains_sk = false;   // the full symmetric top group lies in G
  bool t_is_a5_or_a6 = false;
  bool g_full = false;        // G is the full group T^k.(Out(T) x S_k)
};

// Exact base size from the closed-form decision table. Throws on
// inconsistent flags (g_full without contains_sk, contains_sk for a
// non-giant top group, k < 2, k > |T| with no valid ell, ...).
unsigned base_size_formula(const BaseSizeQuery& q);

// True iff the group has a unique regular suborbit: |T| = 60 (A5 tag),
// k in {3, 57}, full group.
bool classify_r1(const Int& t_order, const Int& k, bool t_is_a5_or_a6,
                 bool g_full);

// Upper bound 1 - P on the non-trivial-stabilizer proportion at size k,
// given the regular-pair probability P measured at size k+1. Requires
// k >= 4.
Rat pq_bridge(const Rat& p_value, std::uint64_t k);

}  // namespace diagbase
