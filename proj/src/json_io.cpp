#include "diagbase/json_io.hpp"

namespace diagbase {

namespace {

Json json_header(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

}  // namespace

Json witness_to_json(const AutAction& a, const SubsetWitness& w) {
  Json j = json_header("subset_witness");
  j["group"] = w.group;
  j["k"] = w.subset.size();
  j["subset"] = w.subset;
  Json cycles = Json::array();
  for (Point x : w.subset) cycles.push_back(a.t().perm(x).cycle_string());
  j["subset_cycles"] = cycles;
  j["certificate_kind"] = certificate_kind_string(w.kind);
  j["stabilizer_order"] = w.stabilizer_order.str();
  j["seed"] = w.seed;
  j["budget"] = w.budget;
  j["detail"] = w.detail;
  return j;
}

Json failure_to_json(const SearchFailure& f) {
  Json j = json_header("search_failure");
  j["reason"] = f.reason;
  j["attempts"] = f.attempts;
  j["exhaustive"] = f.exhaustive;
  return j;
}

Json bound_report_to_json(const BoundReport& rep) {
  Json j = json_header("bound_report");
  j["inequality"] = rep.name;
  j["parameters"] = rep.params;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["rounding"] = rep.rounding_note;
  j["verdict"] = verdict_string(rep.verdict);
  j["citations"] = rep.notes;
  return j;
}

Json orbit_count_to_json(const std::string& group, std::uint64_t k,
                         const OrbitCount& oc) {
  Json j = json_header("orbit_count");
  j["group"] = group;
  j["k"] = k;
  j["regular_count"] = oc.regular;
  j["total_orbit_count"] = oc.total;
  j["k_used"] = oc.k_used;
  j["complement_used"] = oc.complement_used;
  j["subsets_scanned"] = oc.subsets_scanned;
  j["orbit_size_sum"] = oc.orbit_size_sum.str();
  return j;
}

Json stabilizer_to_json(const StabilizerDescription& desc) {
  Json j;
  j["order"] = desc.order.str();
  j["any_odd_pi"] = desc.any_odd_pi;
  j["any_transposition_pi"] = desc.any_transposition_pi;
  Json recs = Json::array();
  for (const StabRecord& r : desc.records) {
    Json rec;
    rec["alpha"] = r.alpha;
    rec["c"] = r.c;
    rec["pi0"] = r.pi0.cycle_string();
    rec["pi_count"] = r.pi_count.str();
    recs.push_back(std::move(rec));
  }
  j["records"] = recs;
  return j;
}

Json base_report_to_json(const AutAction& a, const BaseCandidate& cand,
                         const GSelector& sel, const BaseCheck& check) {
  Json j = json_header("base_candidate");
  j["group"] = cand.group.empty() ? a.name() : cand.group;
  j["k"] = cand.k;
  j["ell"] = cand.ell;
  j["tuples"] = cand.rows;
  j["top"] = top_group_string(sel.top);
  j["out"] = sel.out_labels.empty() ? std::string("full")
                                    : out_labels_string(sel.out_labels);
  j["provenance"] = cand.provenance;
  j["verdict"] = check.is_base;
  j["stabilizer_order"] = check.stabilizer.order.str();
  j["stabilizer"] = stabilizer_to_json(check.stabilizer);
  j["detail"] = cand.detail;
  return j;
}

Json partition_to_json(const AutAction& a, const TPartition& part) {
  Json j = json_header("t_partition");
  j["group"] = a.name();
  j["k"] = part.k;
  j["ell"] = part.ell;
  Json blocks = Json::object();
  for (Point t = 0; t < part.block_size.size(); ++t) {
    if (part.block_size[t] == 0) continue;
    Json b;
    b["start"] = part.block_start[t];
    b["size"] = part.block_size[t];
    blocks[std::to_string(t)] = b;
  }
  j["blocks"] = blocks;
  j["core"] = part.core;
  j["anchor"] = part.anchor;
  j["core_witness"] = witness_to_json(a, part.core_witness);
  return j;
}

Json pair_to_json(const std::string& group, const PairWitness& w) {
  Json j = json_header("k2_pair");
  j["group"] = group;
  j["x"] = w.x;
  j["y"] = w.y;
  j["seed"] = w.seed;
  j["budget"] = w.budget;
  j["detail"] = w.detail;
  return j;
}

Json refusal_to_json(const std::string& group, std::uint64_t k,
                     const EdgeRefusal& r) {
  Json j = json_header("edge_refusal");
  j["group"] = group;
  j["k"] = k;
  j["tag"] = r.tag;
  j["description"] = r.description;
  return j;
}

VerifyOutcome verify_certificate(const Json& j, unsigned threads) {
  if (!j.contains("kind")) return {false, "missing kind field"};
  std::string kind = j["kind"];
  if (j.value("schema_version", 0) != kSchemaVersion)
    return {false, "unsupported schema version"};
  try {
    if (kind == "subset_witness") {
      AutAction a = build_aut_action(resolve_group(j.at("group")));
      std::vector<Point> subset = j.at("subset").get<std::vector<Point>>();
      for (Point x : subset)
        if (x >= a.t_order()) return {false, "subset index out of range"};
      auto stab = setwise_stabilizer(a, subset);
      Int claimed(j.at("stabilizer_order").get<std::string>());
      if (Int(stab.size()) != claimed)
        return {false, "recomputed stabilizer order " +
                           std::to_string(stab.size()) + " != claimed " +
                           claimed.str()};
      if (stab.size() != 1) return {false, "stabilizer is not trivial"};
      return {true, "stabilizer recomputed exhaustively: trivial"};
    }
    if (kind == "base_candidate") {
      AutAction a = build_aut_action(resolve_group(j.at("group")));
      BaseCandidate cand;
      cand.group = j.at("group");
      cand.k = j.at("k");
      cand.ell = j.at("ell");
      cand.rows = j.at("tuples").get<std::vector<std::vector<Point>>>();
      GSelector sel;
      sel.top = top_group_from_string(j.at("top"));
      std::string out_field = j.at("out");
      if (out_field != "full") {
        std::size_t pos = 0;
        while (pos < out_field.size()) {
          std::size_t c = out_field.find(',', pos);
          if (c == std::string::npos) c = out_field.size();
          sel.out_labels.push_back(std::stoul(out_field.substr(pos, c - pos)));
          pos = c + 1;
        }
      }
      for (const auto& row : cand.rows) {
        if (row.size() != cand.k) return {false, "row length mismatch"};
        for (Point x : row)
          if (x >= a.t_order()) return {false, "row entry out of range"};
      }
      BaseCheck check = is_base(a, candidate_tuples(a, cand), sel, threads);
      bool claimed_verdict = j.at("verdict");
      Int claimed_order(j.at("stabilizer_order").get<std::string>());
      if (check.is_base != claimed_verdict)
        return {false, "recomputed verdict differs from the stored one"};
      if (check.stabilizer.order != claimed_order)
        return {false, "recomputed stabilizer order " +
                           check.stabilizer.order.str() + " != claimed " +
                           claimed_order.str()};
      return {true, "base candidate re-verified from scratch"};
    }
  } catch (const std::exception& e) {
    return {false, std::string("verification error: ") + e.what()};
  }
  return {false, "unknown certificate kind '" + kind + "'"};
}

}  // namespace diagbase
