#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "diagbase/group.hpp"

using namespace diagbase;

namespace {

GroupTable a5() {
  return GroupTable::enumerate(
      {parse_cycles("(0,1,2,3,4)", 5), parse_cycles("(0,1,2)", 5)}, 100);
}

GroupTable s3() {
  return GroupTable::enumerate(
      {parse_cycles("(0,1)", 3), parse_cycles("(0,1,2)", 3)}, 10);
}

}  // namespace

TEST_CASE("closure enumeration") {
  GroupTable g = a5();
  CHECK(g.size() == 60);
  CHECK(g.perm(0).is_identity());

  GroupTable triv = GroupTable::enumerate({Perm::identity(4)}, 10, 4);
  CHECK(triv.size() == 1);
  GroupTable empty = GroupTable::enumerate({}, 10, 6);
  CHECK(empty.size() == 1);
  CHECK(empty.degree() == 6);

  GroupTable s7 = GroupTable::enumerate(
      {parse_cycles("(0,1)", 7), parse_cycles("(0,1,2,3,4,5,6)", 7)}, 6000);
  CHECK(s7.size() == 5040);

  CHECK_THROWS_AS(GroupTable::enumerate({parse_cycles("(0,1)", 7),
                                         parse_cycles("(0,1,2,3,4,5,6)", 7)},
                                        100),
                  CapExceeded);
}

TEST_CASE("element indexing is invariant under generator order") {
  Perm g1 = parse_cycles("(0,1,2,3,4)", 5), g2 = parse_cycles("(0,1,2)", 5);
  GroupTable a = GroupTable::enumerate({g1, g2}, 100);
  GroupTable b = GroupTable::enumerate({g2, g1}, 100);
  REQUIRE(a.size() == b.size());
  std::set<Perm> ea, eb;
  for (EIdx i = 0; i < a.size(); ++i) {
    ea.insert(a.perm(i));
    eb.insert(b.perm(i));
  }
  CHECK(ea == eb);
  // Generators are sorted first, so the two runs index identically.
  for (EIdx i = 0; i < a.size(); ++i) CHECK(a.perm(i) == b.perm(i));
}

TEST_CASE("multiplication, inverse and order tables") {
  GroupTable g = a5();
  for (EIdx x = 0; x < g.size(); ++x) {
    CHECK(g.mult(x, g.inv(x)) == 0);
    CHECK(g.order_of(x) == g.perm(x).order());
    CHECK(60 % g.order_of(x) == 0);  // element order divides the group order
  }
  // Spot-check mult against direct composition.
  for (EIdx x = 0; x < g.size(); x += 7)
    for (EIdx y = 0; y < g.size(); y += 11)
      CHECK(g.perm(g.mult(x, y)) == compose(g.perm(x), g.perm(y)));
}

TEST_CASE("centralizers") {
  GroupTable g = a5();
  CHECK(g.centralizer(0).size() == 60);
  EIdx dbl = g.index_of(parse_cycles("(0,1)(2,3)", 5));
  EIdx five = g.index_of(parse_cycles("(0,1,2,3,4)", 5));
  // Independent oracle: plain commutation loop over all elements.
  auto oracle = [&](EIdx x) {
    std::size_t n = 0;
    for (EIdx y = 0; y < g.size(); ++y)
      if (compose(g.perm(x), g.perm(y)) == compose(g.perm(y), g.perm(x))) ++n;
    return n;
  };
  CHECK(g.centralizer(dbl).size() == 4);
  CHECK(oracle(dbl) == 4);
  CHECK(g.centralizer(five).size() == 5);
  CHECK(oracle(five) == 5);
}

TEST_CASE("conjugacy classes") {
  GroupTable triv = GroupTable::enumerate({}, 10, 3);
  CHECK(triv.conjugacy_classes().class_reps.size() == 1);

  GroupTable g = a5();
  ConjClasses cc = g.conjugacy_classes();
  std::multiset<std::uint64_t> sizes(cc.class_sizes.begin(),
                                     cc.class_sizes.end());
  CHECK(sizes == std::multiset<std::uint64_t>{1, 15, 20, 12, 12});

  ConjClasses cs = s3().conjugacy_classes();
  std::multiset<std::uint64_t> s3_sizes(cs.class_sizes.begin(),
                                        cs.class_sizes.end());
  CHECK(s3_sizes == std::multiset<std::uint64_t>{1, 3, 2});

  // Orbit-stabilizer: |class| * |centralizer| = |G|, exhaustively.
  for (EIdx x = 0; x < g.size(); ++x)
    CHECK(cc.class_sizes[cc.class_of[x]] * g.centralizer(x).size() == 60);
}

TEST_CASE("subgroup closure orders") {
  GroupTable g = a5();
  CHECK(g.subgroup_order({0}) == 1);
  EIdx a = g.index_of(parse_cycles("(0,1)(2,3)", 5));
  EIdx b = g.index_of(parse_cycles("(0,1,2)", 5));
  CHECK(g.subgroup_order({a, b}) == 12);  // point stabilizer A4
  EIdx c = g.index_of(parse_cycles("(0,1,2,3,4)", 5));
  CHECK(g.subgroup_order({b, c}) == 60);
}

TEST_CASE("invariable generation pairs") {
  GroupTable g = a5();
  EIdx x3 = g.index_of(parse_cycles("(0,1,2)", 5));
  EIdx x5 = g.index_of(parse_cycles("(0,1,2,3,4)", 5));
  EIdx x2 = g.index_of(parse_cycles("(0,1)(2,3)", 5));
  CHECK(g.is_invariable_pair(x3, x5));
  CHECK_FALSE(g.is_invariable_pair(x2, x5));  // both fit in a dihedral overgroup
  CHECK_FALSE(g.is_invariable_pair(0, x5));
  // Invariable implies generating.
  CHECK(g.subgroup_order({x3, x5}) == 60);
}

TEST_CASE("class product coverage") {
  GroupTable g = s3();
  ConjClasses cc = g.conjugacy_classes();
  std::uint32_t id_class = cc.class_of[0];
  std::uint32_t transp = cc.class_of[g.index_of(parse_cycles("(0,1)", 3))];
  std::uint32_t three = cc.class_of[g.index_of(parse_cycles("(0,1,2)", 3))];
  CHECK(g.class_product_coverage(cc, id_class, transp) ==
        std::set<std::uint32_t>{transp});
  CHECK(g.class_product_coverage(cc, transp, transp) ==
        std::set<std::uint32_t>{id_class, three});

  // Independent double loop over the class members.
  GroupTable a = a5();
  ConjClasses ca = a.conjugacy_classes();
  std::uint32_t c5 = 0;
  for (std::uint32_t c = 0; c < ca.class_reps.size(); ++c)
    if (a.order_of(ca.class_reps[c]) == 5) c5 = c;
  std::set<std::uint32_t> oracle;
  for (EIdx x : ca.members[c5])
    for (EIdx y : ca.members[c5]) oracle.insert(ca.class_of[a.mult(x, y)]);
  CHECK(a.class_product_coverage(ca, c5, c5) == oracle);
}

TEST_CASE("simplicity detection") {
  CHECK(a5().is_simple());
  CHECK_FALSE(s3().is_simple());
}
