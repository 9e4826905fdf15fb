#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "rlab/cubical.hpp"
#include "rlab/metric_space.hpp"
#include "rlab/negative_type.hpp"
#include "rlab/roundness.hpp"

namespace rlab {

using json = nlohmann::json;

// Space file format: {"labels": [...], "dist": [[...], ...]}.
json space_to_json(const FiniteMetricSpace& space);
// Validates the metric axioms unless force is set.
FiniteMetricSpace space_from_json(const json& j, bool force = false);
FiniteMetricSpace load_space(const std::string& path, bool force = false);
void save_space(const FiniteMetricSpace& space, const std::string& path);

json certificate_to_json(const NegTypeCertificate& cert);
NegTypeCertificate certificate_from_json(const json& j);

json pstar_to_json(const PStarResult& result);
PStarResult pstar_from_json(const json& j);

json violation_to_json(const ViolationCertificate& cert);
ViolationCertificate violation_from_json(const json& j);

json embedding_to_json(const L1Embedding& emb, const HyperplaneSet& hps,
                       const Graph& graph);
json euclidean_to_json(const EuclideanConfiguration& config);

// Every emitted result file embeds its manifest. wall_clock_ms is the only
// field expected to differ between identical runs.
struct RunManifest {
  std::string command;
  json parameters;
  std::uint64_t seed = 0;
  std::string tool_version;
  double wall_clock_ms = 0.0;
  std::map<std::string, std::string> input_hashes;
};

json manifest_to_json(const RunManifest& manifest);

// FNV-1a over the file's bytes, rendered as "fnv1a:<16 hex digits>".
std::string fnv1a_file_hash(const std::string& path);

}  // namespace rlab
