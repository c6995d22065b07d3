#pragma once

#include <json.hpp>

#include "diagbase/bounds.hpp"
#include "diagbase/construct.hpp"
#include "diagbase/diagonal.hpp"
#include "diagbase/holomorph.hpp"

namespace diagbase {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json witness_to_json(const AutAction& a, const SubsetWitness& w);
Json failure_to_json(const SearchFailure& f);
Json bound_report_to_json(const BoundReport& rep);
Json orbit_count_to_json(const std::string& group, std::uint64_t k,
                         const OrbitCount& oc);
Json base_report_to_json(const AutAction& a, const BaseCandidate& cand,
                         const GSelector& sel, const BaseCheck& check);
Json stabilizer_to_json(const StabilizerDescription& desc);
Json partition_to_json(const AutAction& a, const TPartition& part);
Json pair_to_json(const std::string& group, const PairWitness& w);
Json refusal_to_json(const std::string& group, std::uint64_t k,
                     const EdgeRefusal& r);

struct VerifyOutcome {
  bool ok = false;
  std::string message;
};

// Re-verifies an emitted certificate from scratch; stored stabilizer data is
// recomputed, never trusted. Dispatches on the "kind" field.
VerifyOutcome verify_certificate(const Json& j, unsigned threads = 0);

}  // namespace diagbase
