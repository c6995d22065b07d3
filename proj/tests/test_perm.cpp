#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diagbase/perm.hpp"

using namespace diagbase;

namespace {

Perm random_perm(std::mt19937& rng, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("compose applies the left factor first") {
  Perm id = Perm::identity(3);
  Perm p({1, 2, 0});
  CHECK(compose(id, p) == p);
  CHECK(compose(p, id) == p);
  Perm q({1, 0, 2});
  // r[i] = q[p[i]]
  CHECK(compose(p, q).images() == std::vector<Point>{0, 2, 1});

  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Perm a = random_perm(rng, 8), b = random_perm(rng, 8);
    Perm c = compose(a, b);
    for (Point i = 0; i < 8; ++i) CHECK(c[i] == b[a[i]]);
  }
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(compose(Perm::identity(3), Perm::identity(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3}), std::invalid_argument);
}

TEST_CASE("element order via cycle lengths") {
  CHECK(Perm::identity(5).order() == 1);
  CHECK(parse_cycles("(0,1,2,3,4)", 5).order() == 5);
  Perm p = parse_cycles("(0,1)(2,3,4)", 6);
  CHECK(p.order() == 6);
  // Independent check by repeated composition.
  Perm acc = p;
  std::uint64_t m = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, p);
    ++m;
  }
  CHECK(m == 6);
}

TEST_CASE("associativity and inverses on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Perm a = random_perm(rng, 9), b = random_perm(rng, 9),
         c = random_perm(rng, 9);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a.inverse(), a) == Perm::identity(9));
    CHECK(compose(a, a.inverse()) == Perm::identity(9));
  }
}

TEST_CASE("parity") {
  CHECK(Perm::identity(4).is_even());
  CHECK_FALSE(parse_cycles("(0,1)", 4).is_even());
  CHECK(parse_cycles("(0,1,2)", 4).is_even());
  CHECK(parse_cycles("(0,1)(2,3)", 4).is_even());
}

TEST_CASE("cycle strings round-trip") {
  CHECK(Perm::identity(4).cycle_string() == "()");
  Perm p = parse_cycles("(0,1,2)(3,4)", 6);
  CHECK(p.cycle_string() == "(0,1,2)(3,4)");
  CHECK(parse_cycles(p.cycle_string(), 6) == p);
  CHECK_THROWS_AS(parse_cycles("(0,9)", 5), std::invalid_argument);
}
