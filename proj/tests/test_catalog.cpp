#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "diagbase/catalog.hpp"

using namespace diagbase;

TEST_CASE("builtin specs") {
  CHECK(builtin_names().size() == 8);
  SimpleGroupSpec a5 = builtin_spec("A5");
  CHECK(a5.natural_degree == 5);
  CHECK(a5.declared_order == 60);
  CHECK(a5.declared_out_order == 2);
  SimpleGroupSpec l27 = builtin_spec("L2(7)");
  CHECK(l27.declared_order == 168);
  CHECK(l27.declared_out_order == 2);
  CHECK_THROWS_AS(builtin_spec("Z2"), ParseError);
}

TEST_CASE("catalog text round-trips bit-exactly") {
  for (const std::string& name : builtin_names()) {
    SimpleGroupSpec spec = builtin_spec(name);
    std::string text = emit_spec(spec);
    SimpleGroupSpec reparsed = parse_spec(text);
    CHECK(reparsed == spec);
    CHECK(emit_spec(reparsed) == text);
  }
}

TEST_CASE("parse errors name the offending line") {
  std::string bad =
      "name X\ndegree 3\norder 6\nout 1\np 0 1\n";  // short image list
  CHECK_THROWS_WITH_AS(parse_spec(bad), doctest::Contains("line 5"),
                       ParseError);
  std::string notperm = "name X\ndegree 3\norder 6\nout 1\np 0 0 1\n";
  CHECK_THROWS_WITH_AS(parse_spec(notperm),
                       doctest::Contains("not a permutation"), ParseError);
  std::string outofrange = "name X\ndegree 3\norder 6\nout 1\np 0 1 7\n";
  CHECK_THROWS_AS(parse_spec(outofrange), ParseError);
}

TEST_CASE("aut action for A5") {
  AutAction a = build_aut_action(builtin_spec("A5"), 20000, true);
  CHECK(a.t_order() == 60);
  CHECK(a.aut_order() == 120);
  CHECK(a.out_order() == 2);
  std::size_t inner = 0;
  for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha)
    if (a.is_inner(alpha)) ++inner;
  CHECK(inner == 60);
  // Every automorphism fixes the identity of T.
  for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha)
    CHECK(a.apply_aut(alpha, 0) == 0);
}

TEST_CASE("aut action orders for the other builtins") {
  AutAction a6 = build_aut_action(builtin_spec("A6"));
  CHECK(a6.t_order() == 360);
  CHECK(a6.aut_order() == 1440);
  CHECK(a6.out_order() == 4);
  // Out(A6) is the Klein group: five subgroups in all.
  CHECK(a6.out().subgroups().size() == 5);
  for (std::uint64_t o : a6.out().elt_orders) CHECK((o == 1 || o == 2));

  AutAction l28 = build_aut_action(builtin_spec("L2(8)"));
  CHECK(l28.aut_order() == 1512);
  CHECK(l28.out_order() == 3);
}

TEST_CASE("declared data is validated") {
  SimpleGroupSpec spec = builtin_spec("A5");
  spec.declared_order = 61;
  CHECK_THROWS_AS(build_aut_action(spec), ParseError);
  spec = builtin_spec("A5");
  spec.declared_out_order = 3;
  CHECK_THROWS_AS(build_aut_action(spec), ParseError);
  // An inner element declared as an outer representative is caught.
  spec = builtin_spec("A5");
  spec.aut_outer_reps = {spec.t_generators[0]};
  CHECK_THROWS_AS(build_aut_action(spec), ParseError);
  // A non-normalizing representative is caught.
  spec = builtin_spec("L2(7)");
  spec.aut_outer_reps = {parse_cycles("(0,1)", 8)};
  CHECK_THROWS_AS(build_aut_action(spec), ParseError);
}

TEST_CASE("exact fixity for A5, with full-scan cross-check") {
  AutAction a = build_aut_action(builtin_spec("A5"));
  FixityResult prime_only = h_exact(a, false);
  FixityResult full = h_exact(a, true);
  CHECK(prime_only.value == 6);
  CHECK(full.value == 6);
  // The threaded reduction is deterministic: same value, same witness.
  FixityResult threaded = h_exact(a, false, 3);
  CHECK(threaded.value == prime_only.value);
  CHECK(threaded.witness == prime_only.witness);
  // Independent recount of the witness' fixed points.
  const Perm& w = a.aut().perm(prime_only.witness);
  std::size_t fixed = 0;
  for (Point x = 0; x < a.t_order(); ++x)
    if (w[x] == x) ++fixed;
  CHECK(fixed == 6);
  CHECK(a.aut().order_of(prime_only.witness) == 2);
  // No automorphism beats the maximum.
  for (EIdx alpha = 1; alpha < a.aut_order(); ++alpha) {
    std::size_t f = 0;
    for (Point x = 0; x < a.t_order(); ++x)
      if (a.apply_aut(alpha, x) == x) ++f;
    CHECK(f <= 6);
  }
}

TEST_CASE("closed-form fixity rows") {
  CHECK(h_formula("An", {5}) == 6);
  CHECK(h_formula("An", {6}) == 24);
  CHECK(h_formula("An", {7}) == 120);
  CHECK(h_formula("An", {11}) == 362880);
  CHECK(h_formula("L2", {7}) == 8);
  CHECK(h_formula("L2", {8}) == 9);
  CHECK(h_formula("L2", {11}) == 12);
  CHECK(h_formula("L2", {13}) == 14);
  CHECK(h_formula("L2", {49}) == 336);  // |PGL2(7)|
  CHECK(h_formula("L2", {9}) == 24);    // matches the A6 row
  CHECK(h_formula("M11", {}) == 48);
  CHECK(h_formula("M12", {}) == 240);
  CHECK(h_formula("J4", {}) == Int("21799895040"));
  CHECK(h_formula("M", {}) == Int("8309562962452852382355161088000000"));
  CHECK(h_formula("G2", {4}) == Int(1024) * 4 * 15);    // q^5 |SL2(q)|
  CHECK(h_formula("2B2", {8}) == 64);
  CHECK(h_formula("2G2", {27}) == 19683);
  CHECK(h_formula("2F4(2)'", {}) == 10240);
  CHECK(h_formula("PSp", {4, 3}) == 9 * 80);      // |Sp2(9)| = q^2 (q^4 - 1)
  CHECK(h_formula("PSp", {6, 2}) == 32 * 720);    // q^(n-1) |Sp4(2)|
  CHECK_THROWS_AS(h_formula("An", {4}), std::invalid_argument);
  CHECK_THROWS_AS(h_formula("L2", {7, 1}), std::invalid_argument);
  CHECK_THROWS_AS(h_formula("Nope", {1}), std::invalid_argument);

  std::string fam;
  std::vector<std::int64_t> params;
  CHECK(h_formula_row_for("A5", fam, params));
  CHECK(fam == "An");
  CHECK(params == std::vector<std::int64_t>{5});
  CHECK(h_formula_row_for("L2(13)", fam, params));
  CHECK(fam == "L2");
  CHECK(h_formula_row_for("M11", fam, params));
  CHECK_FALSE(h_formula_row_for("X99", fam, params));
}

TEST_CASE("outer order cubed stays below the group order") {
  AutAction a5 = build_aut_action(builtin_spec("A5"));
  BoundReport r = out_bound_check(a5);
  CHECK(r.verdict == Verdict::kHolds);  // 8 < 60
  CHECK(r.lhs == "60");
  CHECK(r.rhs == "8");
  AutAction l28 = build_aut_action(builtin_spec("L2(8)"));
  CHECK(out_bound_check(l28).verdict == Verdict::kHolds);  // 27 < 504
}

TEST_CASE("automorphisms are multiplicative (sampled)") {
  AutAction a = build_aut_action(builtin_spec("L2(11)"));
  std::mt19937 rng(3);
  std::uniform_int_distribution<EIdx> de(0, static_cast<EIdx>(a.t_order() - 1));
  std::uniform_int_distribution<EIdx> da(0,
                                         static_cast<EIdx>(a.aut_order() - 1));
  for (int trial = 0; trial < 200; ++trial) {
    EIdx alpha = da(rng), s = de(rng), x = de(rng);
    CHECK(a.apply_aut(alpha, a.t().mult(s, x)) ==
          a.t().mult(a.apply_aut(alpha, s), a.apply_aut(alpha, x)));
  }
}

TEST_CASE("group resolution") {
  CHECK(resolve_group("A5").name == "A5");
  CHECK_THROWS_AS(resolve_group("/nonexistent/file.cat"), ParseError);

  // Explicit file path: first record wins.
  std::string path = "/tmp/diagbase_catalog_test.cat";
  {
    std::ofstream out(path);
    SimpleGroupSpec renamed = builtin_spec("A5");
    renamed.name = "MyGroup";
    out << emit_catalog({renamed, builtin_spec("L2(7)")});
  }
  SimpleGroupSpec from_file = resolve_group(path);
  CHECK(from_file.name == "MyGroup");
  CHECK(from_file.declared_order == 60);

  // Default catalog directory via the environment.
  setenv("DIAGBASE_CATALOG_DIR", "/tmp/diagbase_cat_dir", 1);
  std::filesystem::create_directories("/tmp/diagbase_cat_dir");
  {
    std::ofstream out("/tmp/diagbase_cat_dir/Zed.cat");
    SimpleGroupSpec renamed = builtin_spec("L2(11)");
    renamed.name = "Zed";
    out << emit_spec(renamed);
  }
  CHECK(resolve_group("Zed").declared_order == 660);
  {
    std::ofstream out("/tmp/diagbase_cat_dir/catalog.cat");
    SimpleGroupSpec renamed = builtin_spec("L2(13)");
    renamed.name = "Inner";
    out << emit_catalog({builtin_spec("A7"), renamed});
  }
  CHECK(resolve_group("Inner").declared_order == 1092);
  unsetenv("DIAGBASE_CATALOG_DIR");
  CHECK_THROWS_AS(resolve_group("Inner"), ParseError);
}

TEST_CASE("multi-record catalogs round-trip") {
  std::vector<SimpleGroupSpec> specs{builtin_spec("A5"), builtin_spec("L2(8)"),
                                     builtin_spec("M11")};
  std::string text = emit_catalog(specs);
  auto reparsed = parse_catalog(text);
  REQUIRE(reparsed.size() == 3);
  CHECK(reparsed == specs);
  CHECK(emit_catalog(reparsed) == text);
}

TEST_CASE("the largest catalog group matches its table constant") {
  // |T| = 7920 sits at the practical ceiling for the element-index
  // realization; the exact scan still matches the closed form.
  AutAction m11 = build_aut_action(builtin_spec("M11"));
  CHECK(m11.aut_order() == 7920);
  CHECK(m11.out_order() == 1);
  FixityResult fx = h_exact(m11);
  CHECK(Int(fx.value) == h_formula("M11", {}));
  CHECK(m11.t().is_simple());
  // Trivial outer group: 1 < |T| trivially.
  CHECK(out_bound_check(m11).verdict == Verdict::kHolds);
}

TEST_CASE("naming the anchor and outer labels stays stable across builds") {
  // Two independent builds index automorphisms identically.
  AutAction a = build_aut_action(builtin_spec("L2(7)"));
  AutAction b = build_aut_action(builtin_spec("L2(7)"));
  CHECK(a.aut_order() == b.aut_order());
  for (EIdx alpha = 0; alpha < a.aut_order(); ++alpha) {
    CHECK(a.aut().perm(alpha) == b.aut().perm(alpha));
    CHECK(a.out_label(alpha) == b.out_label(alpha));
  }
}
