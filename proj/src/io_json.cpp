#include "rlab/io_json.hpp"

#include <fstream>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

json space_to_json(const FiniteMetricSpace& space) {
  json j;
  j["labels"] = space.labels;
  json rows = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k));
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  return j;
}

FiniteMetricSpace space_from_json(const json& j, bool force) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("dist"))
    throw ValidationError("space JSON must be an object with 'labels' and 'dist'");
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  const auto& rows = j.at("dist");
  if (!rows.is_array() || rows.size() != labels.size())
    throw ValidationError("space JSON: 'dist' must be a square matrix matching 'labels'");
  const int n = static_cast<int>(labels.size());
  Eigen::MatrixXd dist(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ValidationError("space JSON: 'dist' must be a square matrix matching 'labels'");
    for (int k = 0; k < n; ++k) dist(i, k) = row.at(k).get<double>();
  }
  if (!force) {
    MetricReport report = validate_metric(dist);
    if (!report.valid) {
      const auto& v = report.violations.front();
      std::ostringstream msg;
      msg << "space is not a metric: " << axiom_name(v.axiom)
          << " violated at indices (" << v.i << "," << v.j;
      if (v.k >= 0) msg << "," << v.k;
      msg << "); pass --force to load anyway";
      throw ValidationError(msg.str());
    }
  }
  return make_space(std::move(labels), std::move(dist));
}

FiniteMetricSpace load_space(const std::string& path, bool force) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open space file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("space file " + path + ": " + e.what());
  }
  return space_from_json(j, force);
}

void save_space(const FiniteMetricSpace& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write space file: " + path);
  out << space_to_json(space).dump(2) << '\n';
}

json certificate_to_json(const NegTypeCertificate& cert) {
  json j;
  j["is_negative_type"] = cert.is_negative_type;
  j["extremal_value"] = cert.extremal_value;
  j["tol"] = cert.tol;
  if (cert.witness) {
    json w = json::array();
    for (Eigen::Index i = 0; i < cert.witness->size(); ++i)
      w.push_back((*cert.witness)(i));
    j["witness"] = std::move(w);
  }
  return j;
}

NegTypeCertificate certificate_from_json(const json& j) {
  NegTypeCertificate cert;
  cert.is_negative_type = j.at("is_negative_type").get<bool>();
  cert.extremal_value = j.at("extremal_value").get<double>();
  cert.tol = j.at("tol").get<double>();
  if (j.contains("witness")) {
    const auto& w = j.at("witness");
    Eigen::VectorXd witness(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) witness(i) = w.at(i).get<double>();
    cert.witness = std::move(witness);
  }
  return cert;
}

json pstar_to_json(const PStarResult& result) {
  json j;
  j["p_star"] = result.p_star;
  j["capped"] = result.capped;
  j["tol"] = result.tol;
  j["p_max"] = result.p_max;
  j["lower_certificate"] = certificate_to_json(result.lower_certificate);
  j["upper_certificate"] =
      result.upper_certificate ? certificate_to_json(*result.upper_certificate)
                               : json(nullptr);
  return j;
}

PStarResult pstar_from_json(const json& j) {
  PStarResult result;
  result.p_star = j.at("p_star").get<double>();
  result.capped = j.at("capped").get<bool>();
  result.tol = j.at("tol").get<double>();
  result.p_max = j.at("p_max").get<double>();
  result.lower_certificate = certificate_from_json(j.at("lower_certificate"));
  if (!j.at("upper_certificate").is_null())
    result.upper_certificate = certificate_from_json(j.at("upper_certificate"));
  return result;
}

json violation_to_json(const ViolationCertificate& cert) {
  json j;
  j["p"] = cert.p;
  j["deficiency"] = cert.deficiency;
  j["a"] = cert.config.a;
  j["b"] = cert.config.b;
  return j;
}

ViolationCertificate violation_from_json(const json& j) {
  ViolationCertificate cert;
  cert.p = j.at("p").get<double>();
  cert.deficiency = j.at("deficiency").get<double>();
  cert.config.a = j.at("a").get<std::vector<int>>();
  cert.config.b = j.at("b").get<std::vector<int>>();
  return cert;
}

json embedding_to_json(const L1Embedding& emb, const HyperplaneSet& hps,
                       const Graph& graph) {
  json j;
  j["basepoint"] = emb.basepoint;
  j["dimension"] = emb.dimension();
  j["labels"] = graph.labels;
  json classes = json::array();
  for (int cls = 0; cls < hps.class_count(); ++cls) {
    json edges = json::array();
    for (int e : hps.classes[cls]) {
      auto [u, v] = hps.edges[e];
      edges.push_back(json::array({u, v}));
    }
    classes.push_back({{"id", cls}, {"edges", std::move(edges)}});
  }
  j["classes"] = std::move(classes);
  // sparse indicator vectors: class ids separating each vertex from the
  // basepoint
  json vectors = json::array();
  for (const auto& vec : emb.vectors) {
    json ones = json::array();
    for (int cls = 0; cls < static_cast<int>(vec.size()); ++cls)
      if (vec[cls]) ones.push_back(cls);
    vectors.push_back(std::move(ones));
  }
  j["vectors"] = std::move(vectors);
  return j;
}

json euclidean_to_json(const EuclideanConfiguration& config) {
  json j;
  j["basepoint_index"] = config.basepoint_index;
  j["dimension"] = config.dimension();
  json points = json::array();
  for (Eigen::Index i = 0; i < config.points.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < config.points.cols(); ++k)
      row.push_back(config.points(i, k));
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  return j;
}

json manifest_to_json(const RunManifest& manifest) {
  json j;
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  j["seed"] = manifest.seed;
  j["tool_version"] = manifest.tool_version;
  j["wall_clock_ms"] = manifest.wall_clock_ms;
  j["input_hashes"] = manifest.input_hashes;
  return j;
}

std::string fnv1a_file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot hash missing file: " + path);
  std::uint64_t h = 1469598103934665603ULL;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + hex;
}

}  // namespace rlab
