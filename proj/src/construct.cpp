#include "diagbase/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace diagbase {

namespace {

std::vector<EIdx> k_subgroup_elements(const AutAction& a,
                                      const std::vector<unsigned>& labels) {
  std::vector<EIdx> out;
  for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha)
    if (std::binary_search(labels.begin(), labels.end(), a.out_label(alpha)))
      out.push_back(alpha);
  return out;
}

// Orbit representatives of Aut(T) on the elements of T.
std::vector<Point> aut_orbit_reps(const AutAction& a) {
  std::vector<bool> seen(a.t_order(), false);
  std::vector<Point> reps;
  for (Point x = 0; x < a.t_order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    std::vector<Point> orbit{x};
    seen[x] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (EIdx gen : a.aut().generator_indices()) {
        Point y = a.apply_aut(gen, orbit[head]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
  }
  return reps;
}

struct PairTables {
  // fixes[alpha][t]: t^alpha == t;  inverts[alpha][t]: t^alpha == t^-1.
  std::vector<EIdx> alphas;  // elements of K
  std::vector<std::vector<bool>> fixes;
  std::vector<std::vector<bool>> inverts;
};

PairTables build_pair_tables(const AutAction& a,
                             const std::vector<unsigned>& labels) {
  PairTables pt;
  pt.alphas = k_subgroup_elements(a, labels);
  const GroupTable& t = a.t();
  pt.fixes.resize(pt.alphas.size());
  pt.inverts.resize(pt.alphas.size());
  for (std::size_t i = 0; i < pt.alphas.size(); ++i) {
    const Perm& am = a.aut().perm(pt.alphas[i]);
    pt.fixes[i].assign(t.size(), false);
    pt.inverts[i].assign(t.size(), false);
    for (Point x = 0; x < t.size(); ++x) {
      if (am[x] == x) pt.fixes[i][x] = true;
      if (am[x] == t.inv(x)) pt.inverts[i][x] = true;
    }
  }
  return pt;
}

bool pair_ok(const PairTables& pt, Point x, Point y, std::size_t* fail_i) {
  for (std::size_t i = 0; i < pt.alphas.size(); ++i) {
    bool identity = pt.alphas[i] == 0;
    if (!identity && pt.fixes[i][x] && pt.fixes[i][y]) {
      if (fail_i) *fail_i = i;
      return false;
    }
    if (pt.inverts[i][x] && pt.inverts[i][y]) {
      if (fail_i) *fail_i = i;
      return false;
    }
  }
  return true;
}

}  // namespace

PairResult k2_find_pair(const AutAction& a, const GSelector& sel,
                        std::uint64_t seed, std::uint64_t budget) {
  std::vector<unsigned> labels = resolve_out_labels(a, sel);
  PairTables pt = build_pair_tables(a, labels);
  std::size_t n = a.t_order();

  auto witness = [&](Point x, Point y) {
    PairWitness w;
    w.x = x;
    w.y = y;
    w.seed = seed;
    w.budget = budget;
    w.detail.push_back("joint centralizer in K trivial and no simultaneous "
                       "inverter in K (scanned all " +
                       std::to_string(pt.alphas.size()) + " elements of K)");
    return w;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Point> d(1, static_cast<Point>(n - 1));
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    Point x = d(rng), y = d(rng);
    if (pair_ok(pt, x, y, nullptr)) return witness(x, y);
  }

  // Deterministic refutation over automorphism-orbit representatives when
  // the pair space is small enough: the conditions are invariant under
  // simultaneous conjugation because K is normal in Aut(T).
  std::uint64_t scan_cost = static_cast<std::uint64_t>(n) * n * pt.alphas.size();
  if (scan_cost <= 500'000'000ULL) {
    for (Point x : aut_orbit_reps(a)) {
      if (x == 0) continue;
      for (Point y = 1; y < n; ++y)
        if (pair_ok(pt, x, y, nullptr)) return witness(x, y);
    }
    return SearchFailure{
        "no pair exists: every (x, y) fails one of the two conditions "
        "(proved by a full scan over orbit representatives)",
        budget, true};
  }
  return SearchFailure{"budget exhausted; result is evidence only", budget,
                       false};
}

namespace {

std::uint64_t power_u64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

std::uint64_t TPartition::quota() const {
  return power_u64(block_size.size(), ell - 1);
}

namespace {

std::uint64_t quota_of(const AutAction& a, unsigned ell) {
  return power_u64(a.t_order(), ell - 1);
}

void assign_positions(TPartition& part, std::size_t n) {
  part.block_start.assign(n, 0);
  std::uint64_t pos = 0;
  for (std::size_t t = 0; t < n; ++t) {
    part.block_start[t] = pos;
    pos += part.block_size[t];
  }
  if (pos != part.k)
    throw std::logic_error("partition block sizes do not sum to k");
}

SubsetWitness regular_core(const AutAction& a, std::uint64_t m,
                           std::uint64_t seed, std::uint64_t budget) {
  auto r = find_regular_subset(a, m, seed, budget);
  auto* w = std::get_if<SubsetWitness>(&r);
  if (!w)
    throw std::runtime_error(
        "build_partition: no trivial-stabilizer core subset found within "
        "budget " +
        std::to_string(budget));
  // The partition wants the identity in the core; translating preserves
  // stabilizer triviality.
  if (w->subset[0] != 0) {
    const GroupTable& t = a.t();
    EIdx shift = t.inv(w->subset[0]);
    for (Point& x : w->subset) x = t.mult(shift, x);
    std::sort(w->subset.begin(), w->subset.end());
    w->detail.push_back("translated so the core contains the identity");
    w->kind = CertificateKind::kExhaustive;
    auto stab = setwise_stabilizer(a, w->subset);
    if (stab.size() != 1)
      throw std::logic_error("translated core lost stabilizer triviality");
  }
  return *w;
}

}  // namespace

TPartition build_partition(const AutAction& a, unsigned ell, std::uint64_t k,
                           std::uint64_t seed, std::uint64_t budget) {
  if (ell < 2) throw std::invalid_argument("build_partition: ell >= 2 required");
  std::size_t n = a.t_order();
  std::uint64_t q = quota_of(a, ell);
  if (k <= q || k > q * n - 3)
    throw std::invalid_argument(
        "build_partition: need |T|^(ell-1) < k <= |T|^ell - 3");

  TPartition part;
  part.ell = ell;
  part.k = k;
  part.block_size.assign(n, 0);

  if (k > q * n - 2 * q) {
    // High regime: a full-size block on each element of a (|T|-3)-element
    // core, the rest spread over the three missing elements.
    part.core_witness = regular_core(a, n - 3, seed, budget);
    part.core = part.core_witness.subset;
    std::vector<Point> missing;
    std::vector<bool> in_core(n, false);
    for (Point x : part.core) in_core[x] = true;
    for (Point x = 0; x < n; ++x)
      if (!in_core[x]) missing.push_back(x);
    for (Point x : part.core) part.block_size[x] = q;
    std::uint64_t rest = k - (n - 2) * q + 1;  // split over missing[1], missing[2]
    part.block_size[missing[0]] = q - 1;
    std::uint64_t second = rest > q - 1 ? rest - (q - 1) : 0;
    part.block_size[missing[1]] = second;
    part.block_size[missing[2]] = rest - second;
    part.anchor = missing[0];
  } else if (k > 3 * q) {
    // Middle regime: m full blocks on a trivial-stabilizer core, one
    // singleton block, one remainder block.
    std::uint64_t m = (k - 1) / q;  // m q < k <= (m+1) q
    part.core_witness = regular_core(a, m, seed, budget);
    part.core = part.core_witness.subset;
    std::vector<bool> in_core(n, false);
    for (Point x : part.core) in_core[x] = true;
    std::vector<Point> spare;
    for (Point x = 0; x < n && spare.size() < 2; ++x)
      if (!in_core[x]) spare.push_back(x);
    for (Point x : part.core) part.block_size[x] = q;
    part.block_size[spare[0]] = 1;
    part.block_size[spare[1]] = k - m * q - 1;
    part.anchor = spare[0];
  } else {
    // Low regime: three singleton blocks on a trivial-stabilizer triple, the
    // remaining k-3 positions spread over three other elements in blocks of
    // size != 1.
    part.core_witness = regular_core(a, 3, seed, budget);
    part.core = part.core_witness.subset;
    std::vector<bool> in_core(n, false);
    for (Point x : part.core) in_core[x] = true;
    std::vector<Point> spare;
    for (Point x = 0; x < n && spare.size() < 3; ++x)
      if (!in_core[x]) spare.push_back(x);
    for (Point x : part.core) part.block_size[x] = 1;
    std::uint64_t rest = k - 3;
    for (int i = 0; i < 3; ++i) {
      std::uint64_t take = std::min<std::uint64_t>(q, rest);
      if (rest - take == 1) --take;  // never leave a lone position behind
      part.block_size[spare[i]] = take;
      rest -= take;
    }
    if (rest != 0)
      throw std::logic_error("build_partition: low-regime split failed");
    // Non-identity singleton from the core is the anchor.
    part.anchor = part.core[1];
  }
  assign_positions(part, n);
  validate_partition(a, part);
  return part;
}

void validate_partition(const AutAction& a, const TPartition& part) {
  std::size_t n = a.t_order();
  std::uint64_t q = quota_of(a, part.ell);
  std::uint64_t total = 0;
  for (std::uint64_t s : part.block_size) {
    if (s > q) throw std::logic_error("partition violates the quota (P1)");
    total += s;
  }
  if (total != part.k) throw std::logic_error("partition does not cover [k]");
  if (part.block_size[0] == 0)
    throw std::logic_error("identity block is empty (P2)");
  std::vector<Point> same_share;
  for (Point t = 0; t < n; ++t)
    if (part.block_size[t] == part.block_size[0]) same_share.push_back(t);
  if (same_share != part.core)
    throw std::logic_error("core is not the equal-share class (P2)");
  if (setwise_stabilizer(a, part.core).size() != 1)
    throw std::logic_error("core stabilizer is not trivial (P2)");
  if (part.anchor == 0 ||
      (part.block_size[part.anchor] != 1 &&
       part.block_size[part.anchor] != q - 1))
    throw std::logic_error("anchor block size is not 1 or quota-1 (P3)");
}

std::vector<DiagPoint> candidate_tuples(const AutAction& a,
                                        const BaseCandidate& cand) {
  std::vector<DiagPoint> tuples;
  tuples.push_back(distinguished_point(cand.k));
  for (const auto& row : cand.rows)
    tuples.push_back(normalize_point(a, row));
  return tuples;
}

namespace {

// Mixed-radix enumeration of the (ell-1)-component vectors b_1..b_Q with an
// optional swap moving one distinguished index to the front or back.
struct VectorEnum {
  std::uint64_t n;
  unsigned comps;          // ell - 1
  std::uint64_t q;         // n^comps
  std::uint64_t swap_a = 0, swap_b = 0;  // exchanged indices (0-based)

  // component i (1-based row index) of the h-th vector (1-based h)
  Point component(unsigned i, std::uint64_t h) const {
    std::uint64_t idx = h - 1;
    if (idx == swap_a)
      idx = swap_b;
    else if (idx == swap_b)
      idx = swap_a;
    return static_cast<Point>(idx / power_u64(n, i - 1) % n);
  }
};

}  // namespace

BaseCandidate build_base_main(const AutAction& a, const TPartition& part) {
  validate_partition(a, part);
  std::size_t n = a.t_order();
  std::uint64_t q = quota_of(a, part.ell);

  BaseCandidate cand;
  cand.group = a.name();
  cand.ell = part.ell;
  cand.k = part.k;
  cand.provenance = "main-partition";

  std::vector<Point> row0(part.k);
  for (Point t = 0; t < n; ++t)
    for (std::uint64_t h = 0; h < part.block_size[t]; ++h)
      row0[part.block_start[t] + h] = t;
  cand.rows.push_back(std::move(row0));

  VectorEnum ve{n, static_cast<unsigned>(part.ell - 1), q, 0, 0};
  if (part.block_size[part.anchor] == q - 1) {
    // Anchor block omits exactly one vector; park the all-identity vector at
    // the end so the omitted one is it.
    ve.swap_a = 0;
    ve.swap_b = q - 1;
  }
  for (unsigned i = 1; i < part.ell; ++i) {
    std::vector<Point> row(part.k);
    for (Point t = 0; t < n; ++t)
      for (std::uint64_t h = 1; h <= part.block_size[t]; ++h)
        row[part.block_start[t] + h - 1] = ve.component(i, h);
    cand.rows.push_back(std::move(row));
  }
  cand.detail.push_back("anchor element " + std::to_string(part.anchor) +
                        " with block size " +
                        std::to_string(part.block_size[part.anchor]));
  return cand;
}

namespace {

std::pair<Point, Point> aut_trivial_pair(const AutAction& a) {
  for (Point x = 1; x < a.t_order(); ++x)
    for (Point y = static_cast<Point>(x + 1); y < a.t_order(); ++y)
      if (aut_setwise_stabilizer(a, {x, y}).size() == 1) return {x, y};
  throw std::runtime_error("no 2-subset with trivial automorphism stabilizer");
}

std::vector<Point> aut_trivial_subset(const AutAction& a, std::uint64_t m,
                                      std::uint64_t seed,
                                      std::uint64_t budget) {
  if (m == 2) {
    auto [x, y] = aut_trivial_pair(a);
    return {x, y};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Point> d(1, static_cast<Point>(a.t_order() - 1));
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Point> s;
    while (s.size() < m) {
      Point x = d(rng);
      if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
    }
    std::sort(s.begin(), s.end());
    if (aut_setwise_stabilizer(a, s).size() == 1) return s;
  }
  throw std::runtime_error("no trivial-stabilizer subset of T# found");
}

// x, y, z with trivial triple centralizer in Aut(T) and no automorphism
// inverting all three.
std::array<Point, 3> triple_witness(const AutAction& a) {
  const GroupTable& t = a.t();
  std::vector<Point> reps = aut_orbit_reps(a);
  for (Point x : reps) {
    if (x == 0) continue;
    for (Point y = 1; y < a.t_order(); ++y) {
      std::vector<EIdx> cxy, ixy;
      for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha) {
        const Perm& am = a.aut().perm(alpha);
        if (am[x] == x && am[y] == y && alpha != 0) cxy.push_back(alpha);
        if (am[x] == t.inv(x) && am[y] == t.inv(y)) ixy.push_back(alpha);
      }
      for (Point z = 1; z < a.t_order(); ++z) {
        bool ok = true;
        for (EIdx alpha : cxy)
          if (a.apply_aut(alpha, z) == z) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (EIdx alpha : ixy)
          if (a.apply_aut(alpha, z) == t.inv(z)) {
            ok = false;
            break;
          }
        if (ok) return {x, y, z};
      }
    }
  }
  throw std::runtime_error("no triple witness found");
}

BaseCandidate verified(const AutAction& a, BaseCandidate cand,
                       const GSelector& sel) {
  auto check = is_base(a, candidate_tuples(a, cand), sel);
  if (!check.is_base)
    throw std::runtime_error(
        "edge construction failed verification (stabilizer order " +
        check.stabilizer.order.str() + ")");
  cand.detail.push_back("verified: pointwise stabilizer trivial for top " +
                        top_group_string(sel.top));
  return cand;
}

}  // namespace

EdgeResult build_base_edge(const AutAction& a, unsigned ell, std::uint64_t k,
                           const GSelector& sel, std::uint64_t seed,
                           std::uint64_t budget) {
  std::size_t n = a.t_order();
  std::uint64_t top_of_range = power_u64(n, ell);
  if (k + 2 < top_of_range || k > top_of_range)
    throw std::invalid_argument(
        "build_base_edge: k must be |T|^ell - 2, - 1 or - 0");
  if (k == n)  // ell == 1 boundary: minimum is ell + 2 for every group
    return EdgeRefusal{"k-equals-order",
                       "at k = |T| no size-(ell+1) base exists for any "
                       "admissible group"};
  bool contains_sk = sel.top == TopGroup::kSymmetric;
  std::vector<unsigned> labels = resolve_out_labels(a, sel);
  bool full_out = labels.size() == a.out_order();
  bool a5a6 = a.name() == "A5" || a.name() == "A6";

  if (contains_sk) {
    if (k == top_of_range || k == top_of_range - 1)
      return EdgeRefusal{"symmetric-top-at-boundary",
                         "with the symmetric top group and k in {|T|^l - 1, "
                         "|T|^l} the minimum is ell + 2"};
    // k == |T|^ell - 2
    if (ell == 1)
      return EdgeRefusal{"symmetric-top-at-boundary",
                         "with the symmetric top group and k = |T| - 2 the "
                         "minimum is ell + 2"};
    if (ell == 2 && a5a6 && full_out)
      return EdgeRefusal{"a5-a6-full-group-order-squared-minus-2",
                         "for these two groups the full group at k = |T|^2 - "
                         "2 has minimum ell + 2"};
    if (ell == 2) {
      // Pair over K closes a size-3 base.
      auto pr = k2_find_pair(a, sel, seed, budget);
      auto* pw = std::get_if<PairWitness>(&pr);
      if (!pw)
        throw std::runtime_error(
            "build_base_edge: pair search failed: " +
            std::get<SearchFailure>(pr).reason);
      Point x = pw->x, y = pw->y;
      BaseCandidate cand;
      cand.group = a.name();
      cand.ell = 2;
      cand.k = k;
      cand.provenance = "edge-pair";
      // Blocks: identity and x short by one, everything else full.
      std::vector<std::uint64_t> size(n, n), start(n, 0);
      size[0] = n - 1;
      size[x] = n - 1;
      std::uint64_t pos = 0;
      for (Point t = 0; t < n; ++t) {
        start[t] = pos;
        pos += size[t];
      }
      std::vector<Point> row0(k), row1(k);
      // Element labels g_1..g_n with g_1 = 1 and g_n = y.
      std::vector<Point> g;
      g.push_back(0);
      for (Point t = 1; t < n; ++t)
        if (t != y) g.push_back(t);
      g.push_back(y);
      for (Point t = 0; t < n; ++t)
        for (std::uint64_t h = 1; h <= size[t]; ++h) {
          std::uint64_t j = start[t] + h - 1;
          row0[j] = t;
          row1[j] = t == 0 ? g[h] : g[h - 1];
        }
      cand.rows = {std::move(row0), std::move(row1)};
      cand.detail.push_back("pair witness x=" + std::to_string(x) +
                            " y=" + std::to_string(y));
      return verified(a, std::move(cand), sel);
    }
    // ell >= 3: triple witness construction.
    auto [x, y, z] = triple_witness(a);
    std::uint64_t q = power_u64(n, ell - 1);
    BaseCandidate cand;
    cand.group = a.name();
    cand.ell = ell;
    cand.k = k;
    cand.provenance = "edge-triple";
    std::vector<std::uint64_t> size(n, q), start(n, 0);
    size[0] = q - 1;
    size[x] = q - 1;
    std::uint64_t pos = 0;
    for (Point t = 0; t < n; ++t) {
      start[t] = pos;
      pos += size[t];
    }
    std::vector<Point> row0(k);
    for (Point t = 0; t < n; ++t)
      for (std::uint64_t h = 0; h < size[t]; ++h) row0[start[t] + h] = t;
    cand.rows.push_back(std::move(row0));
    // Vector b_Q = (y, z, ..., z); b_1 stays the all-identity vector.
    std::uint64_t special = y;
    for (unsigned i = 2; i < ell; ++i)
      special += static_cast<std::uint64_t>(z) * power_u64(n, i - 1);
    VectorEnum ve{n, static_cast<unsigned>(ell - 1), q, special, q - 1};
    if (special == q - 1) ve.swap_a = ve.swap_b = 0;
    for (unsigned i = 1; i < ell; ++i) {
      std::vector<Point> row(k);
      for (Point t = 0; t < n; ++t)
        for (std::uint64_t h = 1; h <= size[t]; ++h)
          row[start[t] + h - 1] = ve.component(i, t == 0 ? h + 1 : h);
      cand.rows.push_back(std::move(row));
    }
    cand.detail.push_back("triple witness x=" + std::to_string(x) + " y=" +
                          std::to_string(y) + " z=" + std::to_string(z));
    return verified(a, std::move(cand), sel);
  }

  // The symmetric top group is not contained in G.
  if (ell == 1) {
    // k in {|T|-2, |T|-1}: one row listing T# minus a trivial-stabilizer
    // subset, padded with two identity entries.
    std::uint64_t m = n + 1 - k;  // 2 or 3
    std::vector<Point> r = aut_trivial_subset(a, m, seed, budget);
    BaseCandidate cand;
    cand.group = a.name();
    cand.ell = 1;
    cand.k = k;
    cand.provenance = "edge-aut-subset";
    std::vector<Point> row0;
    std::vector<bool> excluded(n, false);
    for (Point v : r) excluded[v] = true;
    for (Point t = 1; t < n; ++t)
      if (!excluded[t]) row0.push_back(t);
    row0.push_back(0);
    row0.push_back(0);
    cand.rows.push_back(std::move(row0));
    cand.detail.push_back("excluded subset with trivial automorphism "
                          "stabilizer: size " +
                          std::to_string(m));
    return verified(a, std::move(cand), sel);
  }
  // ell >= 2 without the symmetric top: pair with trivial setwise
  // automorphism stabilizer.
  auto [x, y] = aut_trivial_pair(a);
  std::uint64_t q = power_u64(n, ell - 1);
  std::uint64_t missing = top_of_range - k;  // 0, 1 or 2
  BaseCandidate cand;
  cand.group = a.name();
  cand.ell = ell;
  cand.k = k;
  cand.provenance = "edge-aut-pair";
  std::vector<std::uint64_t> size(n, q), start(n, 0);
  size[0] = q + 1;
  size[x] = q - 1;
  size[y] = q - missing;
  std::uint64_t pos = 0;
  for (Point t = 0; t < n; ++t) {
    start[t] = pos;
    pos += size[t];
  }
  if (pos != k) throw std::logic_error("edge partition does not sum to k");
  std::vector<Point> row0(k);
  for (Point t = 0; t < n; ++t)
    for (std::uint64_t h = 0; h < size[t]; ++h) row0[start[t] + h] = t;
  cand.rows.push_back(std::move(row0));
  // Vector b_Q = (y, ..., y); the largest position of the identity block
  // carries the identity in every later row.
  std::uint64_t special = 0;
  for (unsigned i = 1; i < ell; ++i)
    special += static_cast<std::uint64_t>(y) * power_u64(n, i - 1);
  VectorEnum ve{n, static_cast<unsigned>(ell - 1), q, special, q - 1};
  if (special == q - 1) ve.swap_a = ve.swap_b = 0;
  for (unsigned i = 1; i < ell; ++i) {
    std::vector<Point> row(k);
    for (Point t = 0; t < n; ++t)
      for (std::uint64_t h = 1; h <= size[t]; ++h) {
        std::uint64_t j = start[t] + h - 1;
        if (t == 0 && h == size[t])
          row[j] = 0;  // largest identity-block position
        else
          row[j] = ve.component(i, h);
      }
    cand.rows.push_back(std::move(row));
  }
  cand.detail.push_back("pair with trivial setwise automorphism stabilizer: "
                        "x=" + std::to_string(x) + " y=" + std::to_string(y));
  return verified(a, std::move(cand), sel);
}

bool giant_top_group_check(const AutAction& a, std::uint64_t k) {
  if (k < 3) throw std::invalid_argument("giant_top_group_check: k >= 3");
  for (std::uint64_t s = 3; s <= k; s += 2) {
    bool ok = true;
    for (std::uint64_t o : a.out().elt_orders)
      if (std::gcd(s, o) != 1) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace diagbase
