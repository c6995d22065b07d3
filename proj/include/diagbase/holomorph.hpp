#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diagbase/catalog.hpp"
#include "diagbase/numeric.hpp"

namespace diagbase {

// An element g*alpha of Hol(T) = T:Aut(T), acting on T by t -> (g^-1 t)^alpha.
struct HolElement {
  EIdx g = 0;      // translation part, T element index
  EIdx alpha = 0;  // Aut(T) element index

  bool operator==(const HolElement&) const = default;
  auto operator<=>(const HolElement&) const = default;
};

Point hol_apply(const AutAction& a, const HolElement& e, Point t);
// Applies e1 first, then e2.
HolElement hol_mult(const AutAction& a, const HolElement& e1,
                    const HolElement& e2);
HolElement hol_inverse(const AutAction& a, const HolElement& e);

// All g*alpha with s^{g alpha} = s. For each automorphism the candidate
// translations are pinned by matching a reference element of s, so the scan
// costs |Aut(T)| * |s|^2 set-membership checks rather than |Hol(T)| * |s|.
std::vector<HolElement> setwise_stabilizer(const AutAction& a,
                                           const std::vector<Point>& s);

// All alpha with s^alpha = s, for s a subset of T not containing the
// identity (index 0).
std::vector<EIdx> aut_setwise_stabilizer(const AutAction& a,
                                         const std::vector<Point>& s);

enum class CertificateKind { kExhaustive, kOrderMultiset, kSubgroupClosure };
std::string certificate_kind_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

struct SubsetWitness {
  std::string group;
  std::vector<Point> subset;  // ascending T element indices
  Int stabilizer_order = 1;
  CertificateKind kind = CertificateKind::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::vector<std::string> detail;
};

struct CertifyResult {
  std::optional<SubsetWitness> witness;
  std::string refusal;  // set when no certificate applies; not a failure
};

// Sufficient-condition certificate that Hol(T,s) = 1, for s containing the
// identity. Requires (ii) every translate order-multiset to differ from the
// base multiset, plus (i) a proof that Aut(T, s \ {1}) = 1 obtained from one
// of: distinct orders + <s> = T; the centreless-maximal-subgroup route when
// Out(T) = 1; or a direct scan of Aut(T). Refuses (without deciding) when
// none applies: the condition is sufficient, not necessary.
CertifyResult certify_trivial(const AutAction& a, const std::vector<Point>& s);

struct SearchFailure {
  std::string reason;
  std::uint64_t attempts = 0;
  // True when the failure is a proof (full enumeration), not just evidence
  // from a seeded search.
  bool exhaustive = false;
};

using SubsetSearchResult = std::variant<SubsetWitness, SearchFailure>;

// Seeded search for an m-subset with trivial holomorph stabilizer. Samples
// uniform subsets containing the identity; sizes above |T|/2 are searched on
// the complement (Hol(T,S) = Hol(T, T\S)). Deterministic for fixed
// (seed, budget). A returned witness is always verified; failure only means
// the budget ran out.
SubsetSearchResult find_regular_subset(const AutAction& a, std::uint64_t m,
                                       std::uint64_t seed,
                                       std::uint64_t budget);

using PairSearchResult =
    std::variant<std::pair<SubsetWitness, SubsetWitness>, SearchFailure>;

// Seeded search for two regular k-subsets containing the identity whose
// order-multiset data certifies that they lie in distinct Hol(T)-orbits:
// every translate multiset of the first differs from the base multiset of
// the second.
PairSearchResult distinct_orbit_pair(const AutAction& a, std::uint64_t k,
                                     std::uint64_t seed, std::uint64_t budget);

struct OrbitCount {
  std::uint64_t regular = 0;
  std::uint64_t total = 0;
  std::uint64_t k_used = 0;        // min(k, |T|-k)
  bool complement_used = false;
  std::uint64_t subsets_scanned = 0;
  Int orbit_size_sum = 0;  // sum of orbit sizes over representatives
};

// Exact orbit census of Hol(T) on k-subsets by canonical (lexicographically
// minimal) images with early-abort pruning. Requires C(|T|, min(k,|T|-k))
// <= cap.
OrbitCount count_regular_orbits(const AutAction& a, std::uint64_t k,
                                std::uint64_t cap = 1'000'000,
                                unsigned threads = 0);

}  // namespace diagbase
