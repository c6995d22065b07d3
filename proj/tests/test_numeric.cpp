#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagbase/numeric.hpp"

using namespace diagbase;

TEST_CASE("binomials and factorials") {
  CHECK(binom(60, 3) == 34220);
  CHECK(binom(2, 1) == 2);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(9) == 362880);
  // Pascal identity on a few rows.
  for (int n = 1; n < 12; ++n)
    for (int j = 1; j < n; ++j)
      CHECK(binom(n, j) == binom(n - 1, j - 1) + binom(n - 1, j));
}

TEST_CASE("integer roots") {
  CHECK(iroot(0, 3) == 0);
  CHECK(iroot(1, 7) == 1);
  CHECK(iroot(26, 3) == 2);
  CHECK(iroot(27, 3) == 3);
  CHECK(iroot(28, 3) == 3);
  Int big = ipow(Int(12345), 6);
  CHECK(iroot(big, 6) == 12345);
  CHECK(iroot(big - 1, 6) == 12344);
}

TEST_CASE("exact floor of log2 multiples") {
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(2) == 1);
  CHECK(floor_log2(60) == 5);
  CHECK(floor_mul_log2(4, 7920) == 51);  // 4 log2 7920 = 51.80...
  CHECK(floor_mul_log2(4, 60) == 23);    // 4 log2 60 = 23.62...
}

TEST_CASE("constant enclosures bracket the truth") {
  RatInterval e = e_enclosure(64);
  CHECK(e.lo < e.hi);
  CHECK(e.lo > Rat(2718281828, 1000000000));
  CHECK(e.hi < Rat(2718281829, 1000000000));

  RatInterval pi = pi_enclosure(64);
  CHECK(pi.lo > Rat(31415926535, 10000000000));
  CHECK(pi.hi < Rat(31415926536, 10000000000));

  RatInterval e1 = exp_enclosure(Rat(1), 64);
  CHECK(e1.lo <= e.hi);
  CHECK(e1.hi >= e.lo);
  RatInterval em1 = exp_enclosure(Rat(-1), 64);
  CHECK(em1.lo > Rat(367879441, 1000000000));
  CHECK(em1.hi < Rat(367879442, 1000000000));
  RatInterval e10 = exp_enclosure(Rat(10), 48);
  CHECK(e10.lo > Rat(22026));
  CHECK(e10.hi < Rat(22027));
}

TEST_CASE("log2 and fractional power enclosures") {
  RatInterval lg = log2_enclosure(60, 64);
  CHECK(lg.lo > Rat(59, 10));
  CHECK(lg.hi < Rat(591, 100));
  RatInterval p = pow_enclosure(60, Rat(-1, 3), 64);
  // 60^(-1/3) = 0.25543...
  CHECK(p.lo > Rat(2554, 10000));
  CHECK(p.hi < Rat(2555, 10000));
  RatInterval cube = pow_enclosure(7, Rat(3), 64);
  CHECK(cube.exact());
  CHECK(cube.lo == 343);
}

TEST_CASE("interval arithmetic is order-correct") {
  RatInterval a(Rat(1), Rat(2)), b(Rat(3), Rat(4));
  RatInterval s = a + b;
  CHECK(s.lo == 4);
  CHECK(s.hi == 6);
  RatInterval d = b - a;
  CHECK(d.lo == 1);
  CHECK(d.hi == 3);
  RatInterval m = a * b;
  CHECK(m.lo == 3);
  CHECK(m.hi == 8);
  RatInterval q = b / a;
  CHECK(q.lo == Rat(3, 2));
  CHECK(q.hi == 4);
  CHECK(strict_greater(b, a) == Verdict::kHolds);
  CHECK(strict_greater(a, b) == Verdict::kFails);
  RatInterval overlap(Rat(1), Rat(5));
  CHECK(strict_greater(overlap, b) == Verdict::kInconclusive);
}

TEST_CASE("tighter enclosures never flip a decided verdict") {
  // e > 2.7 and e < 2.72, decided at low precision, must stay decided (and
  // identical) at high precision.
  for (unsigned prec : {16u, 64u, 256u}) {
    RatInterval e = e_enclosure(prec);
    CHECK(strict_greater(e, RatInterval(Rat(27, 10))) == Verdict::kHolds);
    CHECK(strict_greater(RatInterval(Rat(272, 100)), e) == Verdict::kHolds);
  }
}
