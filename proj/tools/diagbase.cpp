// Command-line front end: catalog inspection, holomorph stabilizers and
// searches, coset-space computations, base constructions, and the exact
// inequality engine. Every command emits a JSON report; certificates can be
// re-verified without re-running the search that produced them.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "diagbase/bounds.hpp"
#include "diagbase/catalog.hpp"
#include "diagbase/construct.hpp"
#include "diagbase/diagonal.hpp"
#include "diagbase/holomorph.hpp"
#include "diagbase/json_io.hpp"

namespace {

using namespace diagbase;

struct CommonOpts {
  std::string output;
  bool no_meta = false;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  std::uint64_t cap = 1'000'000;
  std::uint64_t omega_cap = 10'000;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--output", opts.output, "write the JSON report to a file");
  cmd->add_flag("--no-meta", opts.no_meta,
                "omit the meta block (timestamps) for byte-stable output");
  cmd->add_option("--threads", opts.threads,
                  "worker threads (0 = all cores); results are independent "
                  "of this value");
}

int emit(const Json& body, const CommonOpts& opts) {
  Json j = body;
  if (!opts.no_meta) {
    Json meta;
    meta["tool"] = "diagbase";
    meta["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();
    j["meta"] = meta;
  }
  std::string text = j.dump(2) + "\n";
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.output);
    if (!out) {
      std::cerr << "cannot write " << opts.output << "\n";
      return 4;
    }
    out << text;
  }
  return 0;
}

std::vector<Point> parse_point_list(const std::string& s) {
  std::vector<Point> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoul(item));
  return out;
}

GSelector parse_selector(const std::string& top, const std::string& out) {
  GSelector sel;
  sel.top = top_group_from_string(top);
  if (out == "full") {
    sel.out_labels.clear();
  } else if (out == "inn" || out == "trivial" || out == "1") {
    sel.out_labels = {0};
  } else {
    for (Point v : parse_point_list(out))
      sel.out_labels.push_back(static_cast<unsigned>(v));
  }
  return sel;
}

struct GroupParams {
  Int t_order;
  Int out_order;
  Int h;
  std::string name;
};

GroupParams group_params(const std::string& name) {
  SimpleGroupSpec spec = resolve_group(name);
  GroupParams gp;
  gp.name = spec.name;
  gp.t_order = spec.declared_order;
  gp.out_order = spec.declared_out_order;
  std::string family;
  std::vector<std::int64_t> params;
  if (h_formula_row_for(spec.name, family, params)) {
    gp.h = h_formula(family, params);
  } else {
    AutAction a = build_aut_action(spec);
    gp.h = h_exact(a).value;
  }
  return gp;
}

Json verdict_json(const BoundReport& rep) { return bound_report_to_json(rep); }

int run_app(int argc, char** argv) {
  CLI::App app{"exact computations for diagonal-type group actions"};
  app.require_subcommand(1);
  CommonOpts opts;

  // ---------------- catalog ----------------
  auto* catalog = app.add_subcommand("catalog", "catalog inspection");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list builtin groups");
  add_common(cat_list, opts);
  cat_list->callback([&] {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "catalog_list";
    Json groups = Json::array();
    for (const std::string& name : builtin_names()) {
      SimpleGroupSpec s = builtin_spec(name);
      Json g;
      g["name"] = s.name;
      g["degree"] = s.natural_degree;
      g["order"] = s.declared_order;
      g["out"] = s.declared_out_order;
      groups.push_back(g);
    }
    j["groups"] = groups;
    std::exit(emit(j, opts));
  });

  auto* cat_check = catalog->add_subcommand("check", "validate a record");
  std::string group;
  bool simplicity = false, multiplicative = false;
  cat_check->add_option("--group", group, "builtin name or catalog file")
      ->required();
  cat_check->add_flag("--simplicity", simplicity,
                      "also check that the group is simple");
  cat_check->add_flag("--multiplicative", multiplicative,
                      "fully check every automorphism is multiplicative");
  add_common(cat_check, opts);
  cat_check->callback([&] {
    SimpleGroupSpec spec = resolve_group(group);
    AutAction a = build_aut_action(spec, 20000, multiplicative);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "catalog_check";
    j["group"] = spec.name;
    j["t_order"] = a.t_order();
    j["aut_order"] = a.aut_order();
    j["out_order"] = a.out_order();
    std::string emitted = emit_spec(spec);
    j["roundtrip_ok"] = parse_spec(emitted) == spec;
    if (simplicity) j["simple"] = a.t().is_simple();
    j["out_bound"] = bound_report_to_json(out_bound_check(a));
    std::exit(emit(j, opts));
  });

  // ---------------- hol ----------------
  auto* hol = app.add_subcommand("hol", "holomorph computations");
  hol->require_subcommand(1);

  auto* hol_stab = hol->add_subcommand("stab", "setwise stabilizer of a subset");
  std::string subset_str;
  hol_stab->add_option("--group", group)->required();
  hol_stab->add_option("--subset", subset_str, "comma-separated element indices")
      ->required();
  add_common(hol_stab, opts);
  hol_stab->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    std::vector<Point> s = parse_point_list(subset_str);
    auto stab = setwise_stabilizer(a, s);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "setwise_stabilizer";
    j["group"] = a.name();
    j["subset"] = s;
    j["order"] = stab.size();
    Json elems = Json::array();
    for (const HolElement& e : stab) {
      Json el;
      el["g"] = e.g;
      el["alpha"] = e.alpha;
      elems.push_back(el);
    }
    j["elements"] = elems;
    std::exit(emit(j, opts));
  });

  auto* hol_search = hol->add_subcommand(
      "search", "seeded search for trivial-stabilizer subsets");
  std::uint64_t m = 3, k = 3;
  bool pair_mode = false;
  hol_search->add_option("--group", group)->required();
  hol_search->add_option("--m,--k", m, "subset size");
  hol_search->add_flag("--pair", pair_mode,
                       "find two subsets in distinct regular orbits");
  hol_search->add_option("--seed", opts.seed, "search seed");
  hol_search->add_option("--budget", opts.budget, "attempt budget");
  add_common(hol_search, opts);
  hol_search->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    if (pair_mode) {
      auto r = distinct_orbit_pair(a, m, opts.seed, opts.budget);
      if (auto* p = std::get_if<std::pair<SubsetWitness, SubsetWitness>>(&r)) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["kind"] = "distinct_orbit_pair";
        j["group"] = a.name();
        j["first"] = witness_to_json(a, p->first);
        j["second"] = witness_to_json(a, p->second);
        std::exit(emit(j, opts));
      }
      std::exit(emit(failure_to_json(std::get<SearchFailure>(r)), opts));
    }
    auto r = find_regular_subset(a, m, opts.seed, opts.budget);
    if (auto* w = std::get_if<SubsetWitness>(&r))
      std::exit(emit(witness_to_json(a, *w), opts));
    std::exit(emit(failure_to_json(std::get<SearchFailure>(r)), opts));
  });

  auto* hol_orbits =
      hol->add_subcommand("orbits", "exact orbit census on k-subsets");
  bool exhaustive = false;
  hol_orbits->add_option("--group", group)->required();
  hol_orbits->add_option("--k", k)->required();
  hol_orbits->add_option("--cap", opts.cap, "subset enumeration cap");
  hol_orbits->add_flag("--exhaustive", exhaustive,
                       "opt in to long runs past the default cap");
  add_common(hol_orbits, opts);
  hol_orbits->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    std::uint64_t cap = exhaustive ? 1'000'000'000ULL : opts.cap;
    OrbitCount oc = count_regular_orbits(a, k, cap, opts.threads);
    std::exit(emit(orbit_count_to_json(a.name(), k, oc), opts));
  });

  auto* hol_verify = hol->add_subcommand("verify", "re-verify a certificate");
  std::string in_path;
  hol_verify->add_option("--in", in_path, "certificate JSON file")->required();
  add_common(hol_verify, opts);
  hol_verify->callback([&] {
    std::ifstream in(in_path);
    if (!in) {
      std::cerr << "cannot read " << in_path << "\n";
      std::exit(4);
    }
    Json cert = Json::parse(in);
    VerifyOutcome v = verify_certificate(cert, opts.threads);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "verification";
    j["input"] = in_path;
    j["verified"] = v.ok;
    j["message"] = v.message;
    std::exit(emit(j, opts));
  });

  // ---------------- diag ----------------
  auto* diag = app.add_subcommand("diag", "coset-space computations");
  diag->require_subcommand(1);
  std::string top = "S", out_sel = "full";

  auto* diag_act = diag->add_subcommand("act", "apply a group element to a point");
  std::string coords_str, u_str, pi_str = "()";
  std::uint64_t alpha_idx = 0;
  diag_act->add_option("--group", group)->required();
  diag_act->add_option("--coords", coords_str,
                       "point coordinates (last entry must be 0)")
      ->required();
  diag_act->add_option("--u", u_str, "translation components")->required();
  diag_act->add_option("--alpha", alpha_idx, "automorphism index");
  diag_act->add_option("--pi", pi_str, "top permutation in cycle notation");
  add_common(diag_act, opts);
  diag_act->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    DiagPoint p;
    p.coords = parse_point_list(coords_str);
    WElement w;
    w.u = parse_point_list(u_str);
    w.alpha = static_cast<EIdx>(alpha_idx);
    w.pi = parse_cycles(pi_str, p.coords.size());
    DiagPoint img = act(a, w, p);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "diag_act";
    j["group"] = a.name();
    j["coords"] = p.coords;
    j["image"] = img.coords;
    std::exit(emit(j, opts));
  });

  auto* diag_vb = diag->add_subcommand("verify-base", "check a base candidate");
  std::string rows_str;
  diag_vb->add_option("--in", in_path, "base candidate JSON file");
  diag_vb->add_option("--group", group);
  diag_vb->add_option("--rows", rows_str,
                      "semicolon-separated rows of comma-separated indices");
  diag_vb->add_option("--top", top, "top group: S, A or 1");
  diag_vb->add_option("--out", out_sel, "outer subgroup: full, inn, or labels");
  add_common(diag_vb, opts);
  diag_vb->callback([&] {
    if (!in_path.empty()) {
      std::ifstream in(in_path);
      if (!in) {
        std::cerr << "cannot read " << in_path << "\n";
        std::exit(4);
      }
      Json cert = Json::parse(in);
      VerifyOutcome v = verify_certificate(cert, opts.threads);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = "verification";
      j["verified"] = v.ok;
      j["message"] = v.message;
      std::exit(emit(j, opts));
    }
    AutAction a = build_aut_action(resolve_group(group));
    GSelector sel = parse_selector(top, out_sel);
    std::vector<DiagPoint> tuples;
    std::stringstream in(rows_str);
    std::string row;
    std::size_t k_len = 0;
    std::vector<std::vector<Point>> raw_rows;
    while (std::getline(in, row, ';')) {
      raw_rows.push_back(parse_point_list(row));
      k_len = raw_rows.back().size();
    }
    tuples.push_back(distinguished_point(k_len));
    for (auto& r : raw_rows) tuples.push_back(normalize_point(a, r));
    BaseCheck check = is_base(a, tuples, sel, opts.threads);
    BaseCandidate cand;
    cand.group = a.name();
    cand.k = k_len;
    cand.ell = static_cast<unsigned>(raw_rows.size());
    cand.rows = raw_rows;
    cand.provenance = "cli-rows";
    std::exit(emit(base_report_to_json(a, cand, sel, check), opts));
  });

  auto* diag_bb = diag->add_subcommand("brute-base", "exact minimal base size");
  diag_bb->add_option("--group", group)->required();
  diag_bb->add_option("--k", k)->required();
  diag_bb->add_option("--top", top, "top group: S, A or 1");
  diag_bb->add_option("--out", out_sel, "outer subgroup: full, inn, or labels");
  diag_bb->add_option("--omega-cap", opts.omega_cap);
  add_common(diag_bb, opts);
  diag_bb->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    GSelector sel = parse_selector(top, out_sel);
    unsigned b = brute_base_size(a, static_cast<unsigned>(k), sel, opts.omega_cap);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "brute_base_size";
    j["group"] = a.name();
    j["k"] = k;
    j["top"] = top_group_string(sel.top);
    j["out"] = sel.out_labels.empty() ? "full" : out_labels_string(sel.out_labels);
    j["base_size"] = b;
    std::exit(emit(j, opts));
  });

  auto* diag_sub = diag->add_subcommand("suborbits", "count regular suborbits");
  bool sub_exhaustive = false;
  diag_sub->add_option("--group", group)->required();
  diag_sub->add_option("--k", k)->required();
  diag_sub->add_option("--top", top);
  diag_sub->add_option("--out", out_sel);
  diag_sub->add_option("--cap", opts.cap);
  diag_sub->add_option("--omega-cap", opts.omega_cap);
  diag_sub->add_flag("--exhaustive", sub_exhaustive,
                     "opt in to long runs past the default caps");
  add_common(diag_sub, opts);
  diag_sub->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    GSelector sel = parse_selector(top, out_sel);
    std::uint64_t cap = sub_exhaustive ? 1'000'000'000ULL : opts.cap;
    std::uint64_t ocap = sub_exhaustive ? 50'000'000ULL : opts.omega_cap;
    std::uint64_t r =
        count_regular_suborbits(a, k, sel, cap, ocap, opts.threads);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "regular_suborbits";
    j["group"] = a.name();
    j["k"] = k;
    j["top"] = top_group_string(sel.top);
    j["out"] = sel.out_labels.empty() ? "full" : out_labels_string(sel.out_labels);
    j["regular_count"] = r;
    std::exit(emit(j, opts));
  });

  // ---------------- construct ----------------
  auto* cons = app.add_subcommand("construct", "explicit base constructions");
  cons->require_subcommand(1);
  unsigned ell = 2;

  auto* cons_k2 = cons->add_subcommand("k2", "pair witness for k = 2");
  cons_k2->add_option("--group", group)->required();
  cons_k2->add_option("--out", out_sel);
  cons_k2->add_option("--seed", opts.seed);
  cons_k2->add_option("--budget", opts.budget);
  add_common(cons_k2, opts);
  cons_k2->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    GSelector sel = parse_selector("S", out_sel);
    auto r = k2_find_pair(a, sel, opts.seed, opts.budget);
    if (auto* w = std::get_if<PairWitness>(&r))
      std::exit(emit(pair_to_json(a.name(), *w), opts));
    std::exit(emit(failure_to_json(std::get<SearchFailure>(r)), opts));
  });

  auto* cons_part = cons->add_subcommand("partition", "position partition");
  cons_part->add_option("--group", group)->required();
  cons_part->add_option("--ell", ell)->required();
  cons_part->add_option("--k", k)->required();
  cons_part->add_option("--seed", opts.seed);
  cons_part->add_option("--budget", opts.budget);
  add_common(cons_part, opts);
  cons_part->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    TPartition part = build_partition(a, ell, k, opts.seed, opts.budget);
    std::exit(emit(partition_to_json(a, part), opts));
  });

  auto* cons_base = cons->add_subcommand("base", "partition-driven candidate");
  bool verify_flag = true;
  cons_base->add_option("--group", group)->required();
  cons_base->add_option("--ell", ell)->required();
  cons_base->add_option("--k", k)->required();
  cons_base->add_option("--top", top);
  cons_base->add_option("--out", out_sel);
  cons_base->add_option("--seed", opts.seed);
  cons_base->add_option("--budget", opts.budget);
  cons_base->add_flag("--verify,!--no-verify", verify_flag,
                      "verify the candidate before emitting");
  add_common(cons_base, opts);
  cons_base->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    GSelector sel = parse_selector(top, out_sel);
    TPartition part = build_partition(a, ell, k, opts.seed, opts.budget);
    BaseCandidate cand = build_base_main(a, part);
    BaseCheck check;
    if (verify_flag)
      check = is_base(a, candidate_tuples(a, cand), sel, opts.threads);
    std::exit(emit(base_report_to_json(a, cand, sel, check), opts));
  });

  auto* cons_edge = cons->add_subcommand("edge", "boundary sizes");
  cons_edge->add_option("--group", group)->required();
  cons_edge->add_option("--ell", ell)->required();
  cons_edge->add_option("--k", k)->required();
  cons_edge->add_option("--top", top);
  cons_edge->add_option("--out", out_sel);
  cons_edge->add_option("--seed", opts.seed);
  cons_edge->add_option("--budget", opts.budget);
  add_common(cons_edge, opts);
  cons_edge->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    GSelector sel = parse_selector(top, out_sel);
    EdgeResult r = build_base_edge(a, ell, k, sel, opts.seed, opts.budget);
    if (auto* cand = std::get_if<BaseCandidate>(&r)) {
      BaseCheck check = is_base(a, candidate_tuples(a, *cand), sel, opts.threads);
      std::exit(emit(base_report_to_json(a, *cand, sel, check), opts));
    }
    std::exit(emit(refusal_to_json(a.name(), k, std::get<EdgeRefusal>(r)), opts));
  });

  // ---------------- bounds ----------------
  auto* bounds = app.add_subcommand("bounds", "exact inequality engine");
  bounds->require_subcommand(1);
  std::string ineq_name;
  std::uint64_t k0 = 5, l_param = 1, m_param = 1, n_param = 2;
  std::string t_str, out_str, h_str;

  auto* b_check = bounds->add_subcommand("check", "evaluate one inequality");
  std::uint64_t census_cap = 4'000'000'000ULL;
  b_check->add_option("--name", ineq_name, "inequality id")->required();
  b_check->add_option("--group", group, "catalog group supplying |T|, |Out|, h");
  b_check->add_option("--k", k);
  b_check->add_option("--k0", k0);
  b_check->add_option("--m", m_param, "multiplier m, or binomial parameter");
  b_check->add_option("--l", l_param);
  b_check->add_option("--n", n_param);
  b_check->add_option("--t-order", t_str);
  b_check->add_option("--out-order", out_str);
  b_check->add_option("--h-value", h_str);
  b_check->add_option("--census-cap", census_cap,
                      "work cap before the census falls back to upper bounds");
  add_common(b_check, opts);
  b_check->callback([&] {
    GroupParams gp;
    if (!group.empty()) gp = group_params(group);
    if (!t_str.empty()) gp.t_order = Int(t_str);
    if (!out_str.empty()) gp.out_order = Int(out_str);
    if (!h_str.empty()) gp.h = Int(h_str);
    if (ineq_name == "e:prob") {
      std::exit(emit(verdict_json(prob_check(gp.t_order, gp.out_order, gp.h, k)),
                     opts));
    } else if (ineq_name == "e:prob_ori") {
      AutAction a = build_aut_action(resolve_group(group));
      std::exit(emit(
          verdict_json(prob_ori_exact(a, k, opts.threads, census_cap)), opts));
    } else if (ineq_name == "e:Q1+Q2") {
      std::exit(
          emit(verdict_json(q1q2(gp.t_order, gp.out_order, gp.h, k)), opts));
    } else if (ineq_name == "e:binom") {
      SandwichReport sr = binom_sandwich(l_param, m_param, n_param);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = "binom_sandwich";
      j["lower"] = bound_report_to_json(sr.lower);
      j["upper"] = bound_report_to_json(sr.upper);
      j["both_hold"] = sr.both_hold();
      std::exit(emit(j, opts));
    } else if (ineq_name == "e:prob_u") {
      Int hol = gp.t_order * gp.t_order * gp.out_order;
      auto reports = prob_u_criteria(gp.t_order, hol, gp.h, k, k0);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = "prob_u_criteria";
      Json arr = Json::array();
      for (const auto& rep : reports) arr.push_back(bound_report_to_json(rep));
      j["reports"] = arr;
      std::exit(emit(j, opts));
    } else if (ineq_name == "e:prob_u=0:An") {
      std::exit(emit(verdict_json(alternating_u0_inequality(n_param)), opts));
    } else if (ineq_name == "out-bound") {
      AutAction a = build_aut_action(resolve_group(group));
      std::exit(emit(verdict_json(out_bound_check(a)), opts));
    }
    std::cerr << "unknown inequality '" << ineq_name << "'\n";
    std::exit(2);
  });

  auto* b_grid = bounds->add_subcommand("grid", "verdict table over a k range");
  std::uint64_t kmin = 5, kmax = 10;
  std::string csv_path;
  std::vector<std::string> grid_groups;
  b_grid->add_option("--name", ineq_name)->required();
  b_grid->add_option("--group", grid_groups, "one or more groups")->required();
  b_grid->add_option("--kmin", kmin);
  b_grid->add_option("--kmax", kmax);
  b_grid->add_option("--csv", csv_path, "also write a CSV table");
  add_common(b_grid, opts);
  b_grid->callback([&] {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bound_grid";
    j["inequality"] = ineq_name;
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "group,k,verdict,lhs,rhs\n";
    for (const std::string& g : grid_groups) {
      GroupParams gp = group_params(g);
      for (std::uint64_t kk = kmin; kk <= kmax; ++kk) {
        BoundReport rep;
        if (ineq_name == "e:prob")
          rep = prob_check(gp.t_order, gp.out_order, gp.h, kk);
        else if (ineq_name == "e:Q1+Q2")
          rep = q1q2(gp.t_order, gp.out_order, gp.h, kk);
        else {
          std::cerr << "grid supports e:prob and e:Q1+Q2\n";
          std::exit(2);
        }
        Json row;
        row["group"] = gp.name;
        row["k"] = kk;
        row["verdict"] = verdict_string(rep.verdict);
        row["lhs"] = rep.lhs;
        row["rhs"] = rep.rhs;
        rows.push_back(row);
        csv << gp.name << ',' << kk << ',' << verdict_string(rep.verdict)
            << ",\"" << rep.lhs << "\",\"" << rep.rhs << "\"\n";
      }
    }
    j["rows"] = rows;
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      out << csv.str();
    }
    std::exit(emit(j, opts));
  });

  auto* b_ht = bounds->add_subcommand("hT", "fixity of the holomorph action");
  std::string family, eps = "+";
  std::vector<std::int64_t> fam_params;
  bool formula_only = false;
  b_ht->add_option("--group", group);
  b_ht->add_option("--family", family, "table family row");
  b_ht->add_option("--params", fam_params, "family parameters (n and/or q)");
  b_ht->add_option("--eps", eps, "+ or - for families with a sign parameter");
  b_ht->add_flag("--formula-only", formula_only);
  add_common(b_ht, opts);
  b_ht->callback([&] {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "fixity";
    if (!family.empty()) {
      static const std::set<std::string> kSigned = {"L3", "L4", "Ln",
                                                    "POmega", "E6"};
      if (kSigned.count(family)) fam_params.push_back(eps == "-" ? -1 : 1);
      j["family"] = family;
      j["h_formula"] = h_formula(family, fam_params).str();
      std::exit(emit(j, opts));
    }
    SimpleGroupSpec spec = resolve_group(group);
    j["group"] = spec.name;
    std::string fam;
    std::vector<std::int64_t> ps;
    bool have_row = h_formula_row_for(spec.name, fam, ps);
    if (have_row) j["h_formula"] = h_formula(fam, ps).str();
    if (!formula_only) {
      AutAction a = build_aut_action(spec);
      FixityResult fx = h_exact(a, false, opts.threads);
      j["h_exact"] = fx.value;
      j["witness_alpha"] = fx.witness;
      j["witness_order"] = a.aut().order_of(fx.witness);
      if (have_row)
        j["agreement"] = Int(fx.value) == Int(j["h_formula"].get<std::string>());
    }
    std::exit(emit(j, opts));
  });

  // ---------------- prob ----------------
  auto* prob = app.add_subcommand("prob", "probabilistic certificates");
  prob->require_subcommand(1);

  auto* p_qk = prob->add_subcommand("qk", "union-bound certificate for Q_k");
  std::string m_str = "2";
  p_qk->add_option("--group", group)->required();
  p_qk->add_option("--k", k)->required();
  p_qk->add_option("--m", m_str, "multiplier");
  add_common(p_qk, opts);
  p_qk->callback([&] {
    AutAction a = build_aut_action(resolve_group(group));
    std::exit(
        emit(verdict_json(qk_union_bound(a, k, Int(m_str), opts.threads)), opts));
  });

  auto* p_bridge = prob->add_subcommand("bridge", "bound Q_k via 1 - P_{k+1}");
  std::string p_str;
  std::uint64_t samples = 0;
  p_bridge->add_option("--k", k)->required();
  p_bridge->add_option("--p-value", p_str, "known regular-pair probability");
  p_bridge->add_option("--group", group, "sample the probability instead");
  p_bridge->add_option("--samples", samples);
  p_bridge->add_option("--seed", opts.seed);
  add_common(p_bridge, opts);
  p_bridge->callback([&] {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "pq_bridge";
    j["k"] = k;
    Rat p_value;
    if (!p_str.empty()) {
      p_value = Rat(p_str);
      j["p_source"] = "supplied";
      j["certifying"] = false;
      j["note"] = "bound is valid when the supplied value is a true lower "
                  "bound on the regular-pair probability at k+1";
    } else {
      if (samples == 0) {
        std::cerr << "need --p-value or --group with --samples\n";
        std::exit(2);
      }
      AutAction a = build_aut_action(resolve_group(group));
      const GroupTable& t = a.t();
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<Point> d(0, static_cast<Point>(t.size() - 1));
      std::uint64_t good = 0;
      for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<Point> coords(k);
        for (auto& c : coords) c = d(rng);
        std::sort(coords.begin(), coords.end());
        bool distinct = std::adjacent_find(coords.begin(), coords.end()) ==
                            coords.end() &&
                        coords[0] != 0;
        if (!distinct) continue;
        coords.insert(coords.begin(), 0);
        if (setwise_stabilizer(a, coords).size() == 1) ++good;
      }
      p_value = Rat(good, samples);
      j["group"] = a.name();
      j["samples"] = samples;
      j["seed"] = opts.seed;
      j["p_source"] = "seeded Monte Carlo estimate";
      j["certifying"] = false;
      j["note"] = "sampled estimate; the resulting bound is a trend report, "
                  "not a certificate";
    }
    j["p_value"] = rat_decimal_string(p_value, 9);
    Rat bound = pq_bridge(p_value, k);
    j["qk_upper_bound"] = rat_decimal_string(bound, 9);
    std::exit(emit(j, opts));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const diagbase::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
