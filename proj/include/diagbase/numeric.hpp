#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace diagbase {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(std::uint64_t n);
Int binom(const Int& n, const Int& k);
Int ipow(Int base, std::uint64_t e);

// Floor of the k-th root of n (n >= 0, k >= 1).
Int iroot(const Int& n, unsigned k);

// floor(log2 n) for n >= 1.
std::uint64_t floor_log2(const Int& n);

// floor(m * log2 n), exact: the largest t with 2^t <= n^m.
std::uint64_t floor_mul_log2(std::uint64_t m, const Int& n);

// Closed rational interval [lo, hi]. Transcendental values enter the bounds
// engine only as intervals, so every comparison can be rounded in a sound
// direction or reported as inconclusive.
struct RatInterval {
  Rat lo;
  Rat hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat v) : lo(v), hi(v) {}
  RatInterval(Rat l, Rat h);

  bool exact() const { return lo == hi; }

  RatInterval operator+(const RatInterval& o) const;
  RatInterval operator-(const RatInterval& o) const;
  RatInterval operator*(const RatInterval& o) const;
  RatInterval operator/(const RatInterval& o) const;  // 0 must not lie in o
  RatInterval pow(std::uint64_t n) const;
  RatInterval inverse() const;
};

// Enclosures; `prec` is a target accuracy of roughly 2^-prec.
RatInterval e_enclosure(unsigned prec);
RatInterval pi_enclosure(unsigned prec);
RatInterval exp_enclosure(const Rat& x, unsigned prec);
RatInterval log2_enclosure(const Int& n, unsigned prec);
// base^exponent for an integer base >= 1 and a rational exponent.
RatInterval pow_enclosure(const Int& base, const Rat& exponent, unsigned prec);

enum class Verdict { kHolds, kFails, kInconclusive };

std::string verdict_string(Verdict v);

// Sound three-way comparison of "lhs > rhs".
Verdict strict_greater(const RatInterval& lhs, const RatInterval& rhs);
// Sound three-way comparison of "lhs < rhs".
Verdict strict_less(const RatInterval& lhs, const RatInterval& rhs);

std::string rat_decimal_string(const Rat& r, unsigned digits = 15);
std::string interval_string(const RatInterval& iv);

struct BoundReport {
  std::string name;  // inequality id, e.g. "e:prob"
  std::map<std::string, std::string> params;
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::kInconclusive;
  std::string rounding_note;
  std::vector<std::string> notes;
};

// Evaluates eval(prec) -> {lhs, rhs} at increasing precision until the
// comparison "lhs > rhs" resolves; inconclusive only if the final precision
// still cannot separate the sides.
template <typename F>
BoundReport decide_strict_greater(std::string name,
                                  std::map<std::string, std::string> params,
                                  F&& eval, std::string rounding_note = "") {
  BoundReport rep;
  rep.name = std::move(name);
  rep.params = std::move(params);
  rep.rounding_note = std::move(rounding_note);
  for (unsigned prec : {64u, 128u, 256u, 512u}) {
    auto [lhs, rhs] = eval(prec);
    rep.verdict = strict_greater(lhs, rhs);
    rep.lhs = interval_string(lhs);
    rep.rhs = interval_string(rhs);
    if (rep.verdict != Verdict::kInconclusive) break;
  }
  return rep;
}

}  // namespace diagbase
