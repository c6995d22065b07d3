#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagbase/group.hpp"
#include "diagbase/numeric.hpp"
#include "diagbase/perm.hpp"

namespace diagbase {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A catalog record: a simple group T given by permutation generators on
// `natural_degree` points, together with ambient permutations inducing the
// outer automorphisms of T by conjugation.
struct SimpleGroupSpec {
  std::string name;
  std::size_t natural_degree = 0;
  std::uint64_t declared_order = 0;
  unsigned declared_out_order = 1;
  std::vector<Perm> t_generators;
  std::vector<Perm> aut_outer_reps;

  bool operator==(const SimpleGroupSpec&) const = default;
};

// Catalog text format, one record per group:
//   name A5
//   degree 5
//   order 60
//   out 2
//   p i0 i1 ... i(n-1)     (one line per T-generator)
//   o i0 i1 ... i(n-1)     (one line per outer representative)
// Records are separated by blank lines. load/emit round-trips bit-exactly.
SimpleGroupSpec parse_spec(const std::string& text);
std::vector<SimpleGroupSpec> parse_catalog(const std::string& text);
std::string emit_spec(const SimpleGroupSpec& spec);
std::string emit_catalog(const std::vector<SimpleGroupSpec>& specs);

const std::vector<std::string>& builtin_names();
SimpleGroupSpec builtin_spec(const std::string& name);
// Resolves a builtin name, else reads the named file (first record).
SimpleGroupSpec resolve_group(const std::string& name_or_path);

// The outer automorphism group Out(T) = Aut(T)/Inn(T), with a label per
// coset (label 0 = Inn) and enough structure to enumerate its subgroups.
struct OutGroup {
  unsigned order = 1;
  std::vector<unsigned> mult;            // order x order, row-major
  std::vector<std::uint64_t> elt_orders; // per label
  unsigned multiply(unsigned a, unsigned b) const { return mult[a * order + b]; }
  // All subgroups, each as an ascending label list containing 0.
  std::vector<std::vector<unsigned>> subgroups() const;
};

// T indexed as a group table plus Aut(T) realized as permutations of the
// |T| element indices. Immutable after build; share freely across threads.
class AutAction {
 public:
  const std::string& name() const { return name_; }
  const GroupTable& t() const { return t_; }
  const GroupTable& aut() const { return aut_; }
  std::size_t t_order() const { return t_.size(); }
  std::size_t aut_order() const { return aut_.size(); }
  unsigned out_order() const { return out_.order; }
  const OutGroup& out() const { return out_; }
  bool is_inner(EIdx alpha) const { return out_label_[alpha] == 0; }
  unsigned out_label(EIdx alpha) const { return out_label_[alpha]; }

  Point apply_aut(EIdx alpha, Point t) const { return aut_.perm(alpha)[t]; }

  friend AutAction build_aut_action(const SimpleGroupSpec&, std::uint64_t,
                                    bool);

 private:
  std::string name_;
  GroupTable t_;
  GroupTable aut_;
  std::vector<unsigned> out_label_;  // per automorphism, 0 = inner
  OutGroup out_;
};

// Enumerates T, builds Inn(T) from conjugation by the generators and the
// outer automorphisms from the spec's ambient representatives, and closes
// them as permutations of element indices. When `check_multiplicative` is
// set, (st)^alpha == s^alpha t^alpha is verified for every automorphism on
// all pairs if |T| <= 1000, on random pairs otherwise.
AutAction build_aut_action(const SimpleGroupSpec& spec,
                           std::uint64_t cap = 20000,
                           bool check_multiplicative = false);

struct FixityResult {
  std::uint64_t value = 0;  // max #fixed points of a non-identity automorphism
  EIdx witness = 0;         // lowest-index maximizer
};

// Exact h(T): maximal number of T-elements fixed by a non-identity
// automorphism. Only prime-order automorphisms are scanned (fixed-point sets
// only grow under taking powers); set `full_scan` to cross-check against all
// automorphisms.
FixityResult h_exact(const AutAction& a, bool full_scan = false,
                     unsigned threads = 0);

// Closed-form h(T) per family. Families and parameter conventions:
//   ("An", {n}) ("L2", {q}) ("L3", {q, e}) ("L4", {q, e})
//   ("Ln", {n, q, e}) ("PSp", {n, q}) ("POmega", {n, q, e})
//   ("E8"|"E7"|"F4"|"G2"|"3D4"|"2F4"|"2G2"|"2B2", {q}) ("E6", {q, e})
//   ("2F4(2)'", {}) and sporadic names ("M11", ..., "M") with no parameters.
// e is +1 or -1. Throws on parameters outside a row's conditions.
Int h_formula(const std::string& family, const std::vector<std::int64_t>& params);

// Maps a catalog group name to its (family, params) row, when known.
bool h_formula_row_for(const std::string& group_name, std::string& family,
                       std::vector<std::int64_t>& params);

// |Out(T)|^3 < |T|, checked in exact integers.
BoundReport out_bound_check(const AutAction& a);

}  // namespace diagbase
