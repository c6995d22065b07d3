#include "diagbase/holomorph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "diagbase/parallel.hpp"

namespace diagbase {

Point hol_apply(const AutAction& a, const HolElement& e, Point t) {
  const GroupTable& g = a.t();
  return a.apply_aut(e.alpha, g.mult(g.inv(e.g), t));
}

HolElement hol_mult(const AutAction& a, const HolElement& e1,
                    const HolElement& e2) {
  // (g, alpha)(h, beta) = (g * h^(alpha^-1), alpha beta)
  const GroupTable& t = a.t();
  EIdx ainv = a.aut().inv(e1.alpha);
  EIdx h_back = a.apply_aut(ainv, e2.g);
  return {t.mult(e1.g, h_back), a.aut().mult(e1.alpha, e2.alpha)};
}

HolElement hol_inverse(const AutAction& a, const HolElement& e) {
  const GroupTable& t = a.t();
  EIdx gi = a.apply_aut(e.alpha, t.inv(e.g));
  return {gi, a.aut().inv(e.alpha)};
}

std::vector<HolElement> setwise_stabilizer(const AutAction& a,
                                           const std::vector<Point>& s) {
  if (s.empty()) throw std::invalid_argument("setwise_stabilizer: empty set");
  const GroupTable& t = a.t();
  std::vector<bool> in(t.size(), false);
  for (Point x : s) in[x] = true;
  std::vector<HolElement> stab;
  Point t0 = s[0];
  for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha) {
    EIdx ainv = a.aut().inv(alpha);
    // s^{g alpha} = s forces alpha^-1(u) = g^-1 t0 for some u in s.
    for (Point u : s) {
      Point v = a.apply_aut(ainv, u);
      EIdx g = t.mult(t0, t.inv(v));
      EIdx gi = t.inv(g);
      bool ok = true;
      for (Point x : s) {
        if (!in[a.apply_aut(alpha, t.mult(gi, x))]) {
          ok = false;
          break;
        }
      }
      if (ok) stab.push_back({g, alpha});
    }
  }
  std::sort(stab.begin(), stab.end());
  stab.erase(std::unique(stab.begin(), stab.end()), stab.end());
  return stab;
}

std::vector<EIdx> aut_setwise_stabilizer(const AutAction& a,
                                         const std::vector<Point>& s) {
  for (Point x : s)
    if (x == 0)
      throw std::invalid_argument(
          "aut_setwise_stabilizer: set contains the identity");
  std::vector<bool> in(a.t_order(), false);
  for (Point x : s) in[x] = true;
  std::vector<EIdx> stab;
  for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha) {
    bool ok = true;
    for (Point x : s)
      if (!in[a.apply_aut(alpha, x)]) {
        ok = false;
        break;
      }
    if (ok) stab.push_back(alpha);
  }
  return stab;
}

std::string certificate_kind_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kExhaustive: return "exhaustive";
    case CertificateKind::kOrderMultiset: return "order_multiset";
    default: return "subgroup_closure";
  }
}

CertificateKind certificate_kind_from_string(const std::string& s) {
  if (s == "exhaustive") return CertificateKind::kExhaustive;
  if (s == "order_multiset") return CertificateKind::kOrderMultiset;
  if (s == "subgroup_closure") return CertificateKind::kSubgroupClosure;
  throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

namespace {

std::vector<std::uint64_t> order_multiset(const GroupTable& t,
                                          const std::vector<Point>& s) {
  std::vector<std::uint64_t> m;
  m.reserve(s.size());
  for (Point x : s) m.push_back(t.order_of(x));
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<std::uint64_t> translate_multiset(const GroupTable& t, Point x,
                                              const std::vector<Point>& s) {
  std::vector<std::uint64_t> m;
  m.reserve(s.size());
  EIdx xi = t.inv(x);
  for (Point y : s) m.push_back(t.order_of(t.mult(xi, y)));
  std::sort(m.begin(), m.end());
  return m;
}

std::string multiset_string(const std::vector<std::uint64_t>& m) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ',';
    out << m[i];
  }
  out << '}';
  return out.str();
}

// Automorphism-free route, valid when Out(T) = 1: if the non-identity
// elements have distinct orders and generate a centreless maximal subgroup,
// any stabilizing automorphism centralizes it and must be trivial.
bool maximal_centreless_route(const AutAction& a, const std::vector<Point>& rest,
                              std::vector<std::string>& detail) {
  if (a.out_order() != 1) return false;
  const GroupTable& t = a.t();
  std::vector<EIdx> seeds(rest.begin(), rest.end());
  std::vector<EIdx> m = t.subgroup_elements(seeds);
  if (m.size() == t.size()) return false;  // not a proper subgroup
  // Maximality: adjoining any element outside M generates the whole group.
  // One representative per M-coset suffices.
  std::vector<bool> covered(t.size(), false);
  for (EIdx e : m) covered[e] = true;
  for (EIdx x = 0; x < t.size(); ++x) {
    if (covered[x]) continue;
    std::vector<EIdx> extended = seeds;
    extended.push_back(x);
    if (t.subgroup_order(extended) != t.size()) return false;
    for (EIdx e : m) covered[t.mult(e, x)] = true;
  }
  // Z(M) = 1: central elements commute with the generators.
  for (EIdx z : m) {
    if (z == 0) continue;
    bool central = true;
    for (EIdx y : seeds)
      if (t.mult(z, y) != t.mult(y, z)) {
        central = false;
        break;
      }
    if (central) return false;
  }
  detail.push_back("generated subgroup is maximal with trivial centre (|M| = " +
                   std::to_string(m.size()) + ", Out(T) = 1)");
  return true;
}

}  // namespace

CertifyResult certify_trivial(const AutAction& a, const std::vector<Point>& s) {
  if (std::find(s.begin(), s.end(), Point{0}) == s.end())
    throw std::invalid_argument("certify_trivial: set must contain the identity");
  const GroupTable& t = a.t();
  std::vector<Point> sorted = s;
  std::sort(sorted.begin(), sorted.end());

  SubsetWitness w;
  w.group = a.name();
  w.subset = sorted;
  w.stabilizer_order = 1;

  auto base = order_multiset(t, sorted);
  // Condition (ii): translated order multisets all differ from the base one.
  for (Point x : sorted) {
    if (x == 0) continue;
    auto tx = translate_multiset(t, x, sorted);
    if (tx == base)
      return {std::nullopt,
              "translate multiset at x=" + std::to_string(x) +
                  " equals the base multiset " + multiset_string(base)};
  }

  std::vector<Point> rest;
  for (Point x : sorted)
    if (x != 0) rest.push_back(x);

  // Condition (i): Aut(T, s\{1}) = 1.
  std::vector<std::uint64_t> rest_orders = order_multiset(t, rest);
  bool distinct_orders =
      std::adjacent_find(rest_orders.begin(), rest_orders.end()) ==
      rest_orders.end();
  if (distinct_orders &&
      t.subgroup_order(std::vector<EIdx>(rest.begin(), rest.end())) ==
          t.size()) {
    w.kind = CertificateKind::kOrderMultiset;
    w.detail.push_back("orders " + multiset_string(base) +
                       " are distinct and the set generates the group");
    w.detail.push_back("all translate multisets differ from the base multiset");
    return {w, ""};
  }
  std::vector<std::string> detail;
  if (distinct_orders && maximal_centreless_route(a, rest, detail)) {
    w.kind = CertificateKind::kSubgroupClosure;
    w.detail = std::move(detail);
    w.detail.push_back("orders are distinct; translate multisets all differ");
    return {w, ""};
  }
  if (aut_setwise_stabilizer(a, rest).size() == 1) {
    w.kind = CertificateKind::kOrderMultiset;
    w.detail.push_back("automorphism stabilizer of s\\{1} scanned: trivial");
    w.detail.push_back("all translate multisets differ from the base multiset");
    return {w, ""};
  }
  return {std::nullopt,
          "automorphism stabilizer of s\\{1} is non-trivial, so the "
          "sufficient condition does not apply"};
}

namespace {

// Uniform random (m-1)-subset of {1,...,n-1}, plus the identity.
std::vector<Point> sample_subset_with_identity(std::mt19937_64& rng,
                                               std::vector<Point>& pool,
                                               std::size_t n, std::size_t m) {
  if (pool.size() != n - 1) {
    pool.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) pool[i] = static_cast<Point>(i + 1);
  }
  std::vector<Point> out{0};
  for (std::size_t i = 0; i < m - 1; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, pool.size() - 1);
    std::swap(pool[i], pool[d(rng)]);
    out.push_back(pool[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> complement_of(const std::vector<Point>& s, std::size_t n) {
  std::vector<bool> in(n, false);
  for (Point x : s) in[x] = true;
  std::vector<Point> out;
  out.reserve(n - s.size());
  for (Point x = 0; x < n; ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

// Certificate first, exhaustive scan as fallback. Returns a verified witness
// or nothing.
std::optional<SubsetWitness> try_subset(const AutAction& a,
                                        const std::vector<Point>& s) {
  CertifyResult cert = certify_trivial(a, s);
  if (cert.witness) return cert.witness;
  auto stab = setwise_stabilizer(a, s);
  if (stab.size() != 1) return std::nullopt;
  SubsetWitness w;
  w.group = a.name();
  w.subset = s;
  w.stabilizer_order = 1;
  w.kind = CertificateKind::kExhaustive;
  w.detail.push_back("full holomorph scan found only the identity");
  return w;
}

}  // namespace

SubsetSearchResult find_regular_subset(const AutAction& a, std::uint64_t m,
                                       std::uint64_t seed,
                                       std::uint64_t budget) {
  std::size_t n = a.t_order();
  if (m < 1 || m > n - 1)
    throw std::invalid_argument("find_regular_subset: need 1 <= m <= |T|-1");
  std::uint64_t m_small = std::min<std::uint64_t>(m, n - m);
  bool complement = m_small != m;
  std::mt19937_64 rng(seed);
  std::vector<Point> pool;
  for (std::uint64_t attempt = 1; attempt <= budget; ++attempt) {
    std::vector<Point> s =
        sample_subset_with_identity(rng, pool, n, m_small);
    auto w = try_subset(a, s);
    if (!w) continue;
    w->seed = seed;
    w->budget = budget;
    if (complement) {
      w->detail.push_back(
          "stabilizer computed on the complement of size " +
          std::to_string(m_small) +
          "; setwise stabilizers of a set and its complement coincide");
      w->subset = complement_of(s, n);
    }
    w->detail.push_back("found on attempt " + std::to_string(attempt));
    return *w;
  }
  return SearchFailure{
      "budget exhausted; a negative search result is evidence only (the "
      "search distribution is uniform over subsets containing the identity "
      "and no distribution is canonical)",
      budget, false};
}

PairSearchResult distinct_orbit_pair(const AutAction& a, std::uint64_t k,
                                     std::uint64_t seed,
                                     std::uint64_t budget) {
  std::size_t n = a.t_order();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("distinct_orbit_pair: need 1 <= k <= |T|-1");
  std::uint64_t k_small = std::min<std::uint64_t>(k, n - k);
  bool complement = k_small != k;
  const GroupTable& t = a.t();
  std::mt19937_64 rng(seed);
  std::vector<Point> pool;

  std::optional<SubsetWitness> first;
  std::set<std::vector<std::uint64_t>> first_translates;
  std::uint64_t attempt = 0;
  while (attempt < budget) {
    ++attempt;
    std::vector<Point> s = sample_subset_with_identity(rng, pool, n, k_small);
    auto w = try_subset(a, s);
    if (!w) continue;
    if (!first) {
      first = *w;
      for (Point x : s) first_translates.insert(translate_multiset(t, x, s));
      continue;
    }
    auto base = order_multiset(t, s);
    if (first_translates.count(base)) continue;
    SubsetWitness w1 = *first;
    SubsetWitness w2 = *w;
    w2.detail.push_back(
        "base order multiset " + multiset_string(base) +
        " differs from every translate multiset of the first subset, so the "
        "two orbits are distinct");
    for (SubsetWitness* p : {&w1, &w2}) {
      p->seed = seed;
      p->budget = budget;
      if (complement) {
        p->detail.push_back("orbit data computed at size " +
                            std::to_string(k_small) +
                            "; complements realize the requested size");
        p->subset = complement_of(p->subset, n);
      }
    }
    return std::make_pair(w1, w2);
  }
  return SearchFailure{
      "budget exhausted without certifying two distinct regular orbits; this "
      "is evidence only, not a proof of uniqueness",
      budget, false};
}

namespace {

// Lexicographic unranking of k-subsets of {0..n-1} as ascending vectors.
std::vector<Point> unrank_subset(Int rank, std::uint64_t n, std::uint64_t k) {
  std::vector<Point> out;
  out.reserve(k);
  std::uint64_t x = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    for (;; ++x) {
      Int block = binom(Int(n - 1 - x), Int(k - i - 1));
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(static_cast<Point>(x));
    ++x;
  }
  return out;
}

bool next_subset(std::vector<Point>& s, std::uint64_t n) {
  std::uint64_t k = s.size();
  for (std::uint64_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::uint64_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct OrbitChunk {
  std::uint64_t regular = 0;
  std::uint64_t total = 0;
  Int orbit_size_sum = 0;
};

}  // namespace

OrbitCount count_regular_orbits(const AutAction& a, std::uint64_t k,
                                std::uint64_t cap, unsigned threads) {
  std::size_t n = a.t_order();
  if (k > n) throw std::invalid_argument("count_regular_orbits: k > |T|");
  OrbitCount out;
  out.k_used = std::min(k, n - k);
  out.complement_used = out.k_used != k;
  std::uint64_t kk = out.k_used;
  Int total_subsets = binom(Int(n), Int(kk));
  if (total_subsets > cap)
    throw CapExceeded("count_regular_orbits: C(" + std::to_string(n) + "," +
                      std::to_string(kk) + ") = " + total_subsets.str() +
                      " exceeds cap " + std::to_string(cap));
  out.subsets_scanned = total_subsets.convert_to<std::uint64_t>();
  if (kk == 0) {
    out.total = 1;
    out.orbit_size_sum = 1;
    return out;
  }

  const GroupTable& t = a.t();
  std::uint64_t hol_order =
      static_cast<std::uint64_t>(a.t_order()) * a.aut_order();

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    OrbitChunk chunk;
    std::vector<Point> s = unrank_subset(Int(lo), n, kk);
    std::vector<Point> img(kk);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      // Canonicity scan with early abort: any strictly smaller image rules
      // the subset out as an orbit representative.
      std::uint64_t stab = 0;
      bool canonical = true;
      for (EIdx alpha = 0; alpha < a.aut_order() && canonical; ++alpha) {
        const Perm& am = a.aut().perm(alpha);
        for (EIdx g = 0; g < t.size(); ++g) {
          EIdx gi = t.inv(g);
          for (std::uint64_t i = 0; i < kk; ++i) img[i] = am[t.mult(gi, s[i])];
          std::sort(img.begin(), img.end());
          int cmp = 0;
          for (std::uint64_t i = 0; i < kk; ++i) {
            if (img[i] != s[i]) {
              cmp = img[i] < s[i] ? -1 : 1;
              break;
            }
          }
          if (cmp < 0) {
            canonical = false;
            break;
          }
          if (cmp == 0) ++stab;
        }
      }
      if (canonical) {
        ++chunk.total;
        std::uint64_t orbit = hol_order / stab;
        chunk.orbit_size_sum += orbit;
        if (stab == 1) ++chunk.regular;
      }
      if (rank + 1 < hi) next_subset(s, n);
    }
    return chunk;
  };
  auto merge = [](OrbitChunk acc, OrbitChunk c) {
    acc.regular += c.regular;
    acc.total += c.total;
    acc.orbit_size_sum += c.orbit_size_sum;
    return acc;
  };
  OrbitChunk result = parallel_chunks<OrbitChunk>(
      out.subsets_scanned, threads, work, merge, OrbitChunk{});
  out.regular = result.regular;
  out.total = result.total;
  out.orbit_size_sum = result.orbit_size_sum;
  return out;
}

}  // namespace diagbase
