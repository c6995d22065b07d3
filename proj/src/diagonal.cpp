#include "diagbase/diagonal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "diagbase/holomorph.hpp"
#include "diagbase/parallel.hpp"

namespace diagbase {

DiagPoint normalize_point(const AutAction& a, std::vector<Point> raw) {
  if (raw.empty()) throw std::invalid_argument("normalize_point: empty tuple");
  const GroupTable& t = a.t();
  EIdx shift = t.inv(raw.back());
  DiagPoint p;
  p.coords.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    p.coords[i] = t.mult(shift, raw[i]);
  return p;
}

DiagPoint distinguished_point(std::uint64_t k) {
  DiagPoint p;
  p.coords.assign(k, 0);
  return p;
}

WElement w_identity(std::uint64_t k) {
  WElement w;
  w.u.assign(k, 0);
  w.pi = Perm::identity(k);
  return w;
}

DiagPoint act(const AutAction& a, const WElement& w, const DiagPoint& p) {
  std::uint64_t k = p.coords.size();
  if (w.u.size() != k || w.pi.degree() != k)
    throw std::invalid_argument("act: mismatched arity");
  const GroupTable& t = a.t();
  Perm pinv = w.pi.inverse();
  std::vector<Point> raw(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    Point j = pinv[static_cast<Point>(i)];
    raw[i] = a.apply_aut(w.alpha, t.mult(p.coords[j], w.u[j]));
  }
  return normalize_point(a, std::move(raw));
}

WElement w_mult(const AutAction& a, const WElement& w1, const WElement& w2) {
  std::uint64_t k = w1.u.size();
  if (w2.u.size() != k) throw std::invalid_argument("w_mult: mismatched arity");
  const GroupTable& t = a.t();
  WElement w;
  w.alpha = a.aut().mult(w1.alpha, w2.alpha);
  w.pi = compose(w1.pi, w2.pi);
  EIdx a1inv = a.aut().inv(w1.alpha);
  w.u.resize(k);
  for (std::uint64_t m = 0; m < k; ++m)
    w.u[m] = t.mult(w1.u[m],
                    a.apply_aut(a1inv, w2.u[w1.pi[static_cast<Point>(m)]]));
  return w;
}

std::string top_group_string(TopGroup t) {
  switch (t) {
    case TopGroup::kTrivial: return "1";
    case TopGroup::kAlternating: return "A";
    default: return "S";
  }
}

TopGroup top_group_from_string(const std::string& s) {
  if (s == "1" || s == "trivial") return TopGroup::kTrivial;
  if (s == "A" || s == "alternating") return TopGroup::kAlternating;
  if (s == "S" || s == "symmetric") return TopGroup::kSymmetric;
  throw std::invalid_argument("unknown top group '" + s + "'");
}

std::vector<unsigned> resolve_out_labels(const AutAction& a,
                                         const GSelector& sel) {
  if (sel.out_labels.empty()) {
    std::vector<unsigned> all(a.out_order());
    std::iota(all.begin(), all.end(), 0u);
    return all;
  }
  std::vector<unsigned> labels = sel.out_labels;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty() || labels[0] != 0)
    throw std::invalid_argument("out selector must contain label 0");
  for (unsigned x : labels) {
    if (x >= a.out_order())
      throw std::invalid_argument("out selector label out of range");
    for (unsigned y : labels) {
      unsigned z = a.out().multiply(x, y);
      if (!std::binary_search(labels.begin(), labels.end(), z))
        throw std::invalid_argument("out selector is not closed");
    }
  }
  return labels;
}

std::string out_labels_string(const std::vector<unsigned>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels[i]);
  }
  return s;
}

bool coset_contains(const StabRecord& rec, const Perm& pi) {
  if (pi.degree() != rec.img_block.size()) return false;
  for (Point i = 0; i < rec.img_block.size(); ++i)
    if (rec.shift_block[pi[i]] != rec.img_block[i]) return false;
  return true;
}

bool coset_contains_identity(const StabRecord& rec) {
  for (std::size_t i = 0; i < rec.img_block.size(); ++i)
    if (rec.shift_block[i] != rec.img_block[i]) return false;
  return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

StabilizerScan pointwise_stabilizer_scan(const AutAction& a,
                                         const std::vector<DiagPoint>& tuples,
                                         unsigned threads) {
  if (tuples.empty())
    throw std::invalid_argument("pointwise_stabilizer_scan: no tuples");
  std::uint64_t k = tuples[0].coords.size();
  std::size_t rows = tuples.size();
  for (const DiagPoint& p : tuples) {
    if (p.coords.size() != k)
      throw std::invalid_argument("pointwise_stabilizer_scan: mixed arity");
    if (p.coords.back() != 0)
      throw std::invalid_argument(
          "pointwise_stabilizer_scan: tuple is not normalized");
  }
  for (Point x : tuples[0].coords)
    if (x != 0)
      throw std::invalid_argument(
          "pointwise_stabilizer_scan: first tuple must be the distinguished "
          "point");

  const GroupTable& t = a.t();
  std::size_t n = t.size();

  // w[j][i]: row j of the tuple matrix.
  std::vector<const std::vector<Point>*> w(rows);
  for (std::size_t j = 0; j < rows; ++j) w[j] = &tuples[j].coords;

  // Row fingerprints: S[j][x] = sum_i h(j, x * w_ji) over all x, and
  // T_j(alpha) = sum_i h(j, alpha(w_ji)). Equal row multisets force equal
  // sums, so a mismatch soundly rejects a candidate.
  std::vector<std::vector<std::uint64_t>> rowhash(rows,
                                                  std::vector<std::uint64_t>(n));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t x = 0; x < n; ++x)
      rowhash[j][x] = splitmix64((j + 1) * 0x100000001b3ULL + x);
  std::vector<std::vector<std::uint64_t>> shift_sum(
      rows, std::vector<std::uint64_t>(n, 0));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t s = 0;
      for (std::uint64_t i = 0; i < k; ++i)
        s += rowhash[j][t.mult(static_cast<EIdx>(x), (*w[j])[i])];
      shift_sum[j][x] = s;
    }

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<StabRecord> records;
    std::vector<std::uint64_t> target(rows);
    std::vector<Point> cand(rows);
    std::vector<std::vector<Point>> img(rows, std::vector<Point>(k));
    for (EIdx alpha = static_cast<EIdx>(lo); alpha < hi; ++alpha) {
      const Perm& am = a.aut().perm(alpha);
      for (std::size_t j = 0; j < rows; ++j) {
        std::uint64_t s = 0;
        for (std::uint64_t i = 0; i < k; ++i) {
          img[j][i] = am[(*w[j])[i]];
          s += rowhash[j][img[j][i]];
        }
        target[j] = s;
      }
      // Candidate constants are pinned by sending column 0 to column i'.
      std::unordered_set<std::uint64_t> seen;
      for (std::uint64_t ip = 0; ip < k; ++ip) {
        std::uint64_t key = 0;
        bool ok = true;
        for (std::size_t j = 0; j < rows; ++j) {
          cand[j] = t.mult(img[j][0], t.inv((*w[j])[ip]));
          key = key * 1000003ULL + cand[j];
          if (shift_sum[j][cand[j]] != target[j]) {
            ok = false;
            break;
          }
        }
        if (!ok || !seen.insert(key).second) continue;
        // Exact confirmation: group the shifted and the image columns and
        // demand a block bijection.
        std::map<std::vector<Point>, std::vector<std::uint32_t>> shift_groups,
            img_groups;
        std::vector<Point> col(rows);
        for (std::uint64_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < rows; ++j)
            col[j] = t.mult(cand[j], (*w[j])[i]);
          shift_groups[col].push_back(static_cast<std::uint32_t>(i));
          for (std::size_t j = 0; j < rows; ++j) col[j] = img[j][i];
          img_groups[col].push_back(static_cast<std::uint32_t>(i));
        }
        if (shift_groups.size() != img_groups.size()) continue;
        bool match = true;
        for (auto is = shift_groups.begin(), ii = img_groups.begin();
             is != shift_groups.end(); ++is, ++ii) {
          if (is->first != ii->first || is->second.size() != ii->second.size()) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        StabRecord rec;
        rec.alpha = alpha;
        rec.c = cand;
        rec.img_block.assign(k, 0);
        rec.shift_block.assign(k, 0);
        std::vector<Point> pi0(k);
        std::uint32_t block_id = 0;
        rec.pi_count = 1;
        for (auto is = shift_groups.begin(), ii = img_groups.begin();
             is != shift_groups.end(); ++is, ++ii, ++block_id) {
          const auto& src = ii->second;   // image positions
          const auto& dst = is->second;   // shifted positions
          for (std::size_t x = 0; x < src.size(); ++x) {
            rec.img_block[src[x]] = block_id;
            rec.shift_block[dst[x]] = block_id;
            pi0[src[x]] = dst[x];
          }
          if (src.size() >= 2) rec.blocks_nontrivial = true;
          rec.pi_count *= factorial(src.size());
        }
        rec.pi0 = Perm::unchecked(std::move(pi0));
        records.push_back(std::move(rec));
      }
    }
    return records;
  };
  auto merge = [](std::vector<StabRecord> acc, std::vector<StabRecord> r) {
    for (auto& rec : r) acc.push_back(std::move(rec));
    return acc;
  };
  StabilizerScan scan;
  scan.k = k;
  scan.rows = rows;
  scan.records = parallel_chunks<std::vector<StabRecord>>(
      a.aut_order(), threads, work, merge, {});
  return scan;
}

StabilizerDescription filter_stabilizer(const AutAction& a,
                                        const StabilizerScan& scan,
                                        const GSelector& sel) {
  std::vector<unsigned> labels = resolve_out_labels(a, sel);
  StabilizerDescription out;
  for (const StabRecord& rec : scan.records) {
    if (!std::binary_search(labels.begin(), labels.end(),
                            a.out_label(rec.alpha)))
      continue;
    Int contribution = 0;
    bool odd_here = false;
    switch (sel.top) {
      case TopGroup::kSymmetric:
        contribution = rec.pi_count;
        odd_here = rec.blocks_nontrivial || !rec.pi0.is_even();
        break;
      case TopGroup::kAlternating:
        if (rec.blocks_nontrivial)
          contribution = rec.pi_count / 2;
        else if (rec.pi0.is_even())
          contribution = 1;
        break;
      case TopGroup::kTrivial:
        if (coset_contains_identity(rec)) contribution = 1;
        break;
    }
    if (contribution == 0) continue;
    out.order += contribution;
    out.any_odd_pi = out.any_odd_pi || odd_here;
    if (sel.top == TopGroup::kSymmetric) {
      std::size_t moved = 0;
      for (Point i = 0; i < rec.pi0.degree(); ++i)
        if (rec.pi0[i] != i) ++moved;
      bool pi0_is_transposition = moved == 2;
      // When the coset is the duplicate-block subgroup itself it contains
      // every block transposition.
      if (pi0_is_transposition ||
          (rec.blocks_nontrivial && coset_contains_identity(rec)))
        out.any_transposition_pi = true;
    }
    out.records.push_back(rec);
  }
  return out;
}

StabilizerDescription pointwise_stabilizer(const AutAction& a,
                                           const std::vector<DiagPoint>& tuples,
                                           TopGroup top, unsigned threads) {
  GSelector sel;
  sel.top = top;
  return filter_stabilizer(a, pointwise_stabilizer_scan(a, tuples, threads),
                           sel);
}

BaseCheck is_base(const AutAction& a, const std::vector<DiagPoint>& tuples,
                  const GSelector& sel, unsigned threads) {
  BaseCheck out;
  out.stabilizer =
      filter_stabilizer(a, pointwise_stabilizer_scan(a, tuples, threads), sel);
  out.is_base = out.stabilizer.trivial();
  return out;
}

namespace {

std::vector<Perm> top_group_elements(std::uint64_t k, TopGroup top) {
  std::vector<Perm> out;
  if (top == TopGroup::kTrivial || k == 1) {
    out.push_back(Perm::identity(k));
    return out;
  }
  std::vector<Point> img(k);
  std::iota(img.begin(), img.end(), Point{0});
  do {
    Perm p = Perm::unchecked(img);
    if (top == TopGroup::kSymmetric || p.is_even()) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

struct OmegaSpace {
  std::uint64_t k = 0;
  std::uint64_t n = 0;      // |T|
  std::uint64_t size = 0;   // n^(k-1)

  std::vector<Point> decode(std::uint64_t idx) const {
    std::vector<Point> coords(k, 0);
    for (std::uint64_t i = 0; i + 1 < k; ++i) {
      coords[i] = static_cast<Point>(idx % n);
      idx /= n;
    }
    return coords;
  }
  std::uint64_t encode(const std::vector<Point>& coords) const {
    std::uint64_t idx = 0;
    for (std::uint64_t i = k - 1; i-- > 0;)
      idx = idx * n + coords[i];
    return idx;
  }
};

// Point stabilizer of the distinguished point, as explicit permutations of
// the coset space.
struct PointStabilizer {
  OmegaSpace omega;
  std::vector<std::vector<Point>> table;  // element -> image array

  std::size_t size() const { return table.size(); }
};

PointStabilizer build_point_stabilizer(const AutAction& a, std::uint64_t k,
                                       const GSelector& sel,
                                       std::uint64_t omega_cap) {
  if (k < 2 || k > 3)
    throw std::invalid_argument("coset-space enumeration supports k in {2,3}");
  PointStabilizer ps;
  ps.omega.k = k;
  ps.omega.n = a.t_order();
  ps.omega.size = 1;
  for (std::uint64_t i = 0; i + 1 < k; ++i) {
    ps.omega.size *= ps.omega.n;
    if (ps.omega.size > omega_cap)
      throw CapExceeded("coset space larger than cap " +
                        std::to_string(omega_cap));
  }
  std::vector<unsigned> labels = resolve_out_labels(a, sel);
  std::vector<EIdx> alphas;
  for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha)
    if (std::binary_search(labels.begin(), labels.end(), a.out_label(alpha)))
      alphas.push_back(alpha);
  std::vector<Perm> pis = top_group_elements(k, sel.top);
  std::uint64_t total = static_cast<std::uint64_t>(alphas.size()) * pis.size();
  if (total * ps.omega.size > 200'000'000ULL)
    throw CapExceeded("stabilizer action table would be too large");

  const GroupTable& t = a.t();
  ps.table.reserve(total);
  std::vector<Point> raw(k), coords;
  for (EIdx alpha : alphas) {
    const Perm& am = a.aut().perm(alpha);
    for (const Perm& pi : pis) {
      Perm pinv = pi.inverse();
      std::vector<Point> row(ps.omega.size);
      for (std::uint64_t idx = 0; idx < ps.omega.size; ++idx) {
        coords = ps.omega.decode(idx);
        for (std::uint64_t i = 0; i < k; ++i)
          raw[i] = am[coords[pinv[static_cast<Point>(i)]]];
        EIdx shift = t.inv(raw[k - 1]);
        for (std::uint64_t i = 0; i < k; ++i) raw[i] = t.mult(shift, raw[i]);
        row[idx] = static_cast<Point>(ps.omega.encode(raw));
      }
      ps.table.push_back(std::move(row));
    }
  }
  return ps;
}

struct BaseSearch {
  const PointStabilizer& ps;
  std::map<std::pair<std::vector<std::uint32_t>, unsigned>, bool> memo;

  bool extend(const std::vector<std::uint32_t>& h, unsigned left) {
    if (h.size() == 1) return true;
    if (left == 0) return false;
    auto key = std::make_pair(h, left);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    // New points may be restricted to orbit representatives of the current
    // stabilizer: conjugating a completion moves one representative choice
    // to any other point of its orbit.
    std::vector<char> seen(ps.omega.size, 0);
    for (std::uint64_t w = 0; w < ps.omega.size && !ok; ++w) {
      if (seen[w]) continue;
      std::vector<std::uint32_t> hw;
      for (std::uint32_t e : h) {
        Point img = ps.table[e][w];
        seen[img] = 1;
        if (img == w) hw.push_back(e);
      }
      if (hw.size() == h.size()) continue;  // fixed point, no progress
      ok = extend(hw, left - 1);
    }
    memo[key] = ok;
    return ok;
  }
};

}  // namespace

unsigned brute_base_size(const AutAction& a, unsigned k, const GSelector& sel,
                         std::uint64_t omega_cap) {
  PointStabilizer ps = build_point_stabilizer(a, k, sel, omega_cap);
  std::vector<std::uint32_t> all(ps.size());
  std::iota(all.begin(), all.end(), 0u);
  if (all.size() == 1) return 1;
  BaseSearch search{ps, {}};
  for (unsigned b = 2; b <= 8; ++b)
    if (search.extend(all, b - 1)) return b;
  throw std::runtime_error("brute_base_size: no base of size <= 8 found");
}

std::uint64_t count_regular_suborbits(const AutAction& a, std::uint64_t k,
                                      const GSelector& sel,
                                      std::uint64_t subset_cap,
                                      std::uint64_t omega_cap,
                                      unsigned threads) {
  std::vector<unsigned> labels = resolve_out_labels(a, sel);
  bool full_w =
      sel.top == TopGroup::kSymmetric && labels.size() == a.out_order();
  if (full_w && k <= a.t_order()) {
    std::uint64_t k_small = std::min<std::uint64_t>(k, a.t_order() - k);
    if (binom(Int(a.t_order()), Int(k_small)) <= subset_cap)
      return count_regular_orbits(a, k, subset_cap, threads).regular;
  }
  // Direct coset-space enumeration (valid for any selector, tiny k).
  PointStabilizer ps =
      build_point_stabilizer(a, static_cast<unsigned>(k), sel, omega_cap);
  std::uint64_t regular = 0;
  std::vector<char> seen(ps.omega.size, 0);
  for (std::uint64_t w = 0; w < ps.omega.size; ++w) {
    if (seen[w]) continue;
    std::uint64_t stab = 0;
    for (std::uint32_t e = 0; e < ps.size(); ++e) {
      Point img = ps.table[e][w];
      seen[img] = 1;
      if (img == w) ++stab;
    }
    if (stab == 1) ++regular;
  }
  return regular;
}

bool distinguishing_partition_check(
    const std::vector<Perm>& p_generators,
    const std::array<std::vector<unsigned>, 3>& blocks, std::uint64_t cap) {
  if (p_generators.empty())
    throw std::invalid_argument("distinguishing_partition_check: no generators");
  std::size_t k = p_generators[0].degree();
  std::vector<int> owner(k, -1);
  for (int b = 0; b < 3; ++b) {
    if (blocks[b].empty())
      throw std::invalid_argument("distinguishing partition: empty block");
    for (unsigned x : blocks[b]) {
      if (x >= k || owner[x] != -1)
        throw std::invalid_argument("distinguishing partition: not a partition");
      owner[x] = b;
    }
  }
  for (int x = 0; x < static_cast<int>(k); ++x)
    if (owner[x] == -1)
      throw std::invalid_argument("distinguishing partition: does not cover");
  if (blocks[0].size() == blocks[1].size() ||
      blocks[0].size() == blocks[2].size() ||
      blocks[1].size() == blocks[2].size())
    throw std::invalid_argument("distinguishing partition: sizes must differ");

  GroupTable p = GroupTable::enumerate(p_generators, cap, k);
  for (EIdx e = 1; e < p.size(); ++e) {
    const Perm& pi = p.perm(e);
    bool stabilizes_all = true;
    for (std::size_t x = 0; x < k && stabilizes_all; ++x)
      if (owner[pi[static_cast<Point>(x)]] != owner[x]) stabilizes_all = false;
    if (stabilizes_all) return false;  // non-trivial common stabilizer
  }
  return true;
}

}  // namespace diagbase
