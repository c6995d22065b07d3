#include "diagbase/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diagbase {

Int factorial(std::uint64_t n) {
  Int r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binom(const Int& n, const Int& k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int kk = k;
  if (n - k < kk) kk = n - k;
  Int r = 1;
  for (Int i = 0; i < kk; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Int ipow(Int base, std::uint64_t e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Int iroot(const Int& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("iroot: negative argument");
  if (k == 0) throw std::invalid_argument("iroot: zero index");
  if (n == 0 || n == 1 || k == 1) return n;
  // Newton iteration from a power-of-two overestimate.
  std::uint64_t bits = floor_log2(n) / k + 2;
  Int x = Int(1) << bits;
  for (;;) {
    Int y = ((k - 1) * x + n / ipow(x, k - 1)) / k;
    if (y >= x) break;
    x = y;
  }
  while (ipow(x, k) > n) --x;
  while (ipow(x + 1, k) <= n) ++x;
  return x;
}

std::uint64_t floor_log2(const Int& n) {
  if (n < 1) throw std::invalid_argument("floor_log2: argument < 1");
  return boost::multiprecision::msb(n);
}

std::uint64_t floor_mul_log2(std::uint64_t m, const Int& n) {
  return floor_log2(ipow(n, m));
}

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
  return {lo + o.lo, hi + o.hi};
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
  return {lo - o.hi, hi - o.lo};
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::inverse() const {
  if (lo <= 0 && hi >= 0)
    throw std::domain_error("RatInterval: inverse of interval containing 0");
  return {Rat(1) / hi, Rat(1) / lo};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  return *this * o.inverse();
}

RatInterval RatInterval::pow(std::uint64_t n) const {
  RatInterval r(Rat(1));
  RatInterval b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

RatInterval e_enclosure(unsigned prec) {
  Rat sum = 1;
  Rat term = 1;
  Rat eps = Rat(1) / (Int(1) << (prec + 2));
  std::uint64_t i = 1;
  for (;;) {
    term /= i;
    sum += term;
    if (term < eps && i >= 2) break;
    ++i;
  }
  // Remaining tail is < 2 * last term once i >= 2.
  return {sum, sum + 2 * term};
}

namespace {

// arctan(1/x) via the alternating Leibniz series; partial sums bracket the
// value, so consecutive sums give a rigorous enclosure.
RatInterval arctan_inv(std::uint64_t x, unsigned prec) {
  Rat eps = Rat(1) / (Int(1) << (prec + 4));
  Rat x2 = Rat(Int(x) * Int(x));
  Rat pw = Rat(1) / Int(x);
  Rat sum = pw;
  Rat lo = sum, hi = sum;
  for (std::uint64_t i = 1;; ++i) {
    pw /= x2;
    Rat term = pw / (2 * i + 1);
    if (i % 2 == 1) {
      sum -= term;
      lo = sum;
    } else {
      sum += term;
      hi = sum;
    }
    if (term < eps) break;
  }
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

}  // namespace

RatInterval pi_enclosure(unsigned prec) {
  RatInterval a = arctan_inv(5, prec + 6);
  RatInterval b = arctan_inv(239, prec + 6);
  RatInterval sixteen(Rat(16)), four(Rat(4));
  return sixteen * a - four * b;
}

RatInterval exp_enclosure(const Rat& x, unsigned prec) {
  if (x == 0) return RatInterval(Rat(1));
  if (x < 0) return exp_enclosure(-x, prec).inverse();
  Int n = boost::multiprecision::numerator(x) /
          boost::multiprecision::denominator(x);
  Rat r = x - Rat(n);
  std::uint64_t ni = n.convert_to<std::uint64_t>();
  unsigned p = prec + 8;
  if (ni > 0) p += static_cast<unsigned>(floor_log2(Int(ni) + 1)) + 4;
  RatInterval e = e_enclosure(p);
  RatInterval result = e.pow(ni);
  if (r != 0) {
    // e^r for r in (0,1): once terms halve, the tail is < 2 * next term.
    Rat eps = Rat(1) / (Int(1) << (p + 2));
    Rat sum = 1, term = 1;
    std::uint64_t i = 1;
    for (;;) {
      term = term * r / i;
      sum += term;
      if (i >= 2 && term < eps) break;
      ++i;
    }
    result = result * RatInterval(sum, sum + 2 * term);
  }
  return result;
}

RatInterval log2_enclosure(const Int& n, unsigned prec) {
  if (n < 1) throw std::invalid_argument("log2_enclosure: argument < 1");
  if (n == 1) return RatInterval(Rat(0));
  std::uint64_t qbits = std::min<std::uint64_t>(std::max(prec / 4u, 8u), 16u);
  Int q = Int(1) << qbits;
  std::uint64_t p = floor_log2(ipow(n, q.convert_to<std::uint64_t>()));
  return {Rat(Int(p), q), Rat(Int(p) + 1, q)};
}

RatInterval pow_enclosure(const Int& base, const Rat& exponent, unsigned prec) {
  if (base < 1) throw std::invalid_argument("pow_enclosure: base < 1");
  Int p = boost::multiprecision::numerator(exponent);
  Int q = boost::multiprecision::denominator(exponent);
  bool negative = p < 0;
  if (negative) p = -p;
  Int n = ipow(base, p.convert_to<std::uint64_t>());
  RatInterval result;
  if (q == 1) {
    result = RatInterval(Rat(n));
  } else {
    unsigned k = q.convert_to<unsigned>();
    Int scale = Int(1) << prec;
    Int lo = iroot(n * ipow(scale, k), k);
    result = RatInterval(Rat(lo, scale), Rat(lo + 1, scale));
  }
  return negative ? result.inverse() : result;
}

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    default: return "inconclusive";
  }
}

Verdict strict_greater(const RatInterval& lhs, const RatInterval& rhs) {
  if (lhs.lo > rhs.hi) return Verdict::kHolds;
  if (lhs.hi <= rhs.lo) return Verdict::kFails;
  return Verdict::kInconclusive;
}

Verdict strict_less(const RatInterval& lhs, const RatInterval& rhs) {
  return strict_greater(rhs, lhs);
}

std::string rat_decimal_string(const Rat& r, unsigned digits) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = ipow(Int(10), digits);
  Int scaled = num * scale / den;
  std::string s = scaled.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return (neg ? "-" : "") + s;
}

std::string interval_string(const RatInterval& iv) {
  if (iv.exact()) {
    Int num = boost::multiprecision::numerator(iv.lo);
    Int den = boost::multiprecision::denominator(iv.lo);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
  return "[" + rat_decimal_string(iv.lo) + ", " + rat_decimal_string(iv.hi) +
         "]";
}

}  // namespace diagbase
