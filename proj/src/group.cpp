#include "diagbase/group.hpp"

#include <algorithm>
#include <queue>

namespace diagbase {

namespace {
constexpr std::uint64_t kEagerCayleyEntries = 20'000'000;
constexpr std::uint64_t kEagerCayleyWork = 200'000'000;
}

GroupTable GroupTable::enumerate(std::vector<Perm> generators,
                                 std::uint64_t cap,
                                 std::size_t degree_if_empty) {
  GroupTable g;
  if (generators.empty()) {
    g.degree_ = degree_if_empty;
  } else {
    g.degree_ = generators[0].degree();
    for (const Perm& p : generators)
      if (p.degree() != g.degree_)
        throw std::invalid_argument("enumerate: generators of mixed degree");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::erase_if(generators, [](const Perm& p) { return p.is_identity(); });

  std::unordered_map<std::uint64_t, std::vector<EIdx>> index;
  std::vector<Perm> elements;
  auto lookup = [&](const Perm& p) -> std::optional<EIdx> {
    auto it = index.find(p.hash());
    if (it == index.end()) return std::nullopt;
    for (EIdx i : it->second)
      if (elements[i] == p) return i;
    return std::nullopt;
  };
  auto insert = [&](Perm p) -> EIdx {
    EIdx id = static_cast<EIdx>(elements.size());
    index[p.hash()].push_back(id);
    elements.push_back(std::move(p));
    return id;
  };

  insert(Perm::identity(g.degree_));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& gen : generators) {
      Perm prod = compose(elements[head], gen);
      if (!lookup(prod)) {
        if (elements.size() + 1 > cap)
          throw CapExceeded("enumerate: group order exceeds cap " +
                            std::to_string(cap));
        insert(std::move(prod));
      }
    }
  }

  g.elements_ = std::move(elements);
  g.index_ = std::move(index);
  for (const Perm& gen : generators)
    g.generator_indices_.push_back(*g.find(gen));

  g.inverse_.resize(g.size());
  g.orders_.resize(g.size());
  for (EIdx i = 0; i < g.size(); ++i) {
    g.inverse_[i] = g.index_of(g.elements_[i].inverse());
    g.orders_[i] = g.elements_[i].order();
  }

  std::uint64_t n = g.size();
  if (n * n <= kEagerCayleyEntries &&
      n * n * g.degree_ <= kEagerCayleyWork) {
    g.cayley_.resize(n * n);
    for (EIdx a = 0; a < n; ++a)
      for (EIdx b = 0; b < n; ++b)
        g.cayley_[a * n + b] = g.index_of(compose(g.elements_[a], g.elements_[b]));
    g.has_cayley_ = true;
  }
  return g;
}

std::optional<EIdx> GroupTable::find(const Perm& p) const {
  auto it = index_.find(p.hash());
  if (it == index_.end()) return std::nullopt;
  for (EIdx i : it->second)
    if (elements_[i] == p) return i;
  return std::nullopt;
}

EIdx GroupTable::index_of(const Perm& p) const {
  auto r = find(p);
  if (!r) throw std::invalid_argument("index_of: element not in group");
  return *r;
}

EIdx GroupTable::mult(EIdx a, EIdx b) const {
  if (has_cayley_) return cayley_[static_cast<std::uint64_t>(a) * size() + b];
  return index_of(compose(elements_[a], elements_[b]));
}

std::vector<EIdx> GroupTable::centralizer(EIdx x) const {
  std::vector<EIdx> out;
  for (EIdx y = 0; y < size(); ++y)
    if (mult(x, y) == mult(y, x)) out.push_back(y);
  return out;
}

ConjClasses GroupTable::conjugacy_classes() const {
  ConjClasses cc;
  cc.class_of.assign(size(), UINT32_MAX);
  for (EIdx x = 0; x < size(); ++x) {
    if (cc.class_of[x] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(cc.class_reps.size());
    cc.class_reps.push_back(x);
    std::vector<EIdx> members{x};
    cc.class_of[x] = cid;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (EIdx gen : generator_indices_) {
        EIdx y = conj(members[head], gen);
        if (cc.class_of[y] == UINT32_MAX) {
          cc.class_of[y] = cid;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cc.class_sizes.push_back(members.size());
    cc.members.push_back(std::move(members));
  }
  return cc;
}

std::vector<EIdx> GroupTable::subgroup_elements(
    const std::vector<EIdx>& seeds) const {
  std::vector<bool> in(size(), false);
  std::vector<EIdx> elems{0};
  in[0] = true;
  std::vector<EIdx> gens;
  for (EIdx s : seeds)
    if (!in[s]) {
      in[s] = true;
      elems.push_back(s);
      gens.push_back(s);
    } else if (s != 0) {
      gens.push_back(s);
    }
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (EIdx gen : gens) {
      EIdx y = mult(elems[head], gen);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::uint64_t GroupTable::subgroup_order(const std::vector<EIdx>& seeds) const {
  return subgroup_elements(seeds).size();
}

bool GroupTable::is_invariable_pair(EIdx x, EIdx y) const {
  // Conjugation symmetry: it is enough to range one conjugate over the class.
  std::vector<bool> tried(size(), false);
  for (EIdx h = 0; h < size(); ++h) {
    EIdx yc = conj(y, h);
    if (tried[yc]) continue;
    tried[yc] = true;
    if (subgroup_order({x, yc}) != size()) return false;
  }
  return true;
}

std::set<std::uint32_t> GroupTable::class_product_coverage(
    const ConjClasses& cc, std::uint32_t c1, std::uint32_t c2) const {
  if (c1 >= cc.members.size() || c2 >= cc.members.size())
    throw std::invalid_argument("class_product_coverage: bad class id");
  std::set<std::uint32_t> out;
  for (EIdx a : cc.members[c1])
    for (EIdx b : cc.members[c2]) out.insert(cc.class_of[mult(a, b)]);
  return out;
}

bool GroupTable::is_simple() const {
  if (size() == 1) return false;
  ConjClasses cc = conjugacy_classes();
  for (std::uint32_t c = 0; c < cc.class_reps.size(); ++c) {
    EIdx rep = cc.class_reps[c];
    if (rep == 0) continue;
    // Normal closure of rep = subgroup generated by its whole class.
    if (subgroup_order(cc.members[c]) != size()) return false;
  }
  return true;
}

}  // namespace diagbase
