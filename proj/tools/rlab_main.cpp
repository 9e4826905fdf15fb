// roundness-lab command line front end: generation, p* computation,
// violation search, embeddings, and batch sweeps.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rlab/cubical.hpp"
#include "rlab/errors.hpp"
#include "rlab/generators.hpp"
#include "rlab/graph.hpp"
#include "rlab/io_json.hpp"
#include "rlab/metric_space.hpp"
#include "rlab/negative_type.hpp"
#include "rlab/roundness.hpp"
#include "rlab/version.hpp"

namespace {

using rlab::json;

int default_jobs() {
  if (const char* env = std::getenv("ROUNDNESS_LAB_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void write_json_output(const std::string& path, const json& j) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw rlab::ValidationError("cannot write output file: " + path);
  out << j.dump(2) << '\n';
}

constexpr const char* kCsvHeader =
    "space_id,n_points,p_star,capped,tol,p_max,runtime_ms,seed";

std::string csv_row(const std::string& space_id, int n_points, const std::string& p_star,
                    const std::string& capped, double tol, double p_max,
                    double runtime_ms, std::uint64_t seed) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%d,%s,%s,%.6g,%.6g,%.3f,%llu", space_id.c_str(),
                n_points, p_star.c_str(), capped.c_str(), tol, p_max, runtime_ms,
                static_cast<unsigned long long>(seed));
  return buf;
}

void append_csv(const std::string& path, const rlab::RunManifest& manifest,
                const std::vector<std::string>& rows) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  bool fresh = true;
  if (!path.empty()) {
    fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    file.open(path, std::ios::app);
    if (!file) throw rlab::ValidationError("cannot write csv file: " + path);
    out = &file;
  }
  *out << "# manifest: " << rlab::manifest_to_json(manifest).dump() << '\n';
  if (fresh) *out << kCsvHeader << '\n';
  for (const auto& row : rows) *out << row << '\n';
}

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", p);
  return buf;
}

// ---------------------------------------------------------------------------
// gr

struct GrOpts {
  std::string space_file;
  std::string out;
  std::string csv;
  std::string space_id;
  double tol = 1e-6;
  double p_max = 8.0;
  std::uint64_t seed = 0;
  bool force = false;
};

void run_gr(const GrOpts& opts) {
  Timer timer;
  rlab::FiniteMetricSpace space = rlab::load_space(opts.space_file, opts.force);
  rlab::PStarResult result =
      rlab::generalized_roundness(space, opts.tol, opts.p_max, !opts.force);
  double runtime = timer.elapsed_ms();

  std::string space_id = opts.space_id.empty()
                             ? std::filesystem::path(opts.space_file).stem().string()
                             : opts.space_id;

  rlab::RunManifest manifest;
  manifest.command = "gr";
  manifest.parameters = {{"space", opts.space_file},
                         {"tol", opts.tol},
                         {"pmax", opts.p_max},
                         {"force", opts.force}};
  manifest.seed = opts.seed;
  manifest.tool_version = rlab::kToolVersion;
  manifest.wall_clock_ms = runtime;
  manifest.input_hashes[opts.space_file] = rlab::fnv1a_file_hash(opts.space_file);

  json out;
  out["manifest"] = rlab::manifest_to_json(manifest);
  out["result"] = {{"space_id", space_id},
                   {"n_points", space.size()},
                   {"p_star", result.p_star},
                   {"capped", result.capped},
                   {"compression_lower_bound",
                    rlab::compression_lower_bound(result.p_star)},
                   {"detail", rlab::pstar_to_json(result)}};
  write_json_output(opts.out, out);

  if (!opts.csv.empty())
    append_csv(opts.csv, manifest,
               {csv_row(space_id, space.size(), format_p(result.p_star),
                        result.capped ? "true" : "false", opts.tol, opts.p_max, runtime,
                        opts.seed)});
}

// ---------------------------------------------------------------------------
// deficiency curve over a p grid

void write_curve(const std::string& path, const rlab::RunManifest& manifest,
                 const rlab::FiniteMetricSpace& space,
                 const rlab::GonConfiguration& config, double p_min, double p_max,
                 double step) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw rlab::ValidationError("cannot write curve file: " + path);
    out = &file;
  }
  *out << "# manifest: " << rlab::manifest_to_json(manifest).dump() << '\n';
  *out << "p,deficiency\n";
  char buf[64];
  for (double p = p_min; p <= p_max + 1e-12; p += step) {
    std::snprintf(buf, sizeof buf, "%.6g,%.12g", p,
                  rlab::gon_deficiency(space, config, p));
    *out << buf << '\n';
  }
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(std::stoi(token));
  return out;
}

struct CurveOpts {
  std::string space_file;
  std::string out;
  std::string a;
  std::string b;
  double p_min = 0.1;
  double p_max = 8.0;
  double step = 0.1;
  bool force = false;
};

void run_curve(const CurveOpts& opts) {
  Timer timer;
  rlab::FiniteMetricSpace space = rlab::load_space(opts.space_file, opts.force);
  rlab::GonConfiguration config{parse_index_list(opts.a), parse_index_list(opts.b)};

  rlab::RunManifest manifest;
  manifest.command = "curve";
  manifest.parameters = {{"space", opts.space_file}, {"a", opts.a},
                         {"b", opts.b},              {"pmin", opts.p_min},
                         {"pmax", opts.p_max},       {"step", opts.step}};
  manifest.tool_version = rlab::kToolVersion;
  manifest.wall_clock_ms = timer.elapsed_ms();
  manifest.input_hashes[opts.space_file] = rlab::fnv1a_file_hash(opts.space_file);

  write_curve(opts.out, manifest, space, config, opts.p_min, opts.p_max, opts.step);
}

// ---------------------------------------------------------------------------
// search

struct SearchOpts {
  std::string space_file;
  std::string out;
  std::string curve;
  double p = 2.0;
  std::string strategy = "exhaustive";
  std::uint64_t budget = 100000;
  int max_n = 4;
  std::uint64_t seed = 0;
  int jobs = 0;
  double curve_step = 0.1;
  bool force = false;
};

void run_search(const SearchOpts& opts) {
  Timer timer;
  rlab::FiniteMetricSpace space = rlab::load_space(opts.space_file, opts.force);
  rlab::SearchParams params;
  params.p = opts.p;
  params.strategy = rlab::parse_strategy(opts.strategy);
  params.budget = opts.budget;
  params.max_n = opts.max_n;
  params.seed = opts.seed;
  params.jobs = opts.jobs > 0 ? opts.jobs : default_jobs();
  auto cert = rlab::search_violation(space, params);
  double runtime = timer.elapsed_ms();

  rlab::RunManifest manifest;
  manifest.command = "search";
  manifest.parameters = {{"space", opts.space_file}, {"p", opts.p},
                         {"strategy", opts.strategy}, {"budget", opts.budget},
                         {"max_n", opts.max_n},       {"jobs", params.jobs},
                         {"force", opts.force}};
  manifest.seed = opts.seed;
  manifest.tool_version = rlab::kToolVersion;
  manifest.wall_clock_ms = runtime;
  manifest.input_hashes[opts.space_file] = rlab::fnv1a_file_hash(opts.space_file);

  json out;
  out["manifest"] = rlab::manifest_to_json(manifest);
  out["result"] = {{"found", cert.has_value()},
                   {"certificate", cert ? rlab::violation_to_json(*cert) : json(nullptr)}};
  write_json_output(opts.out, out);

  // deficiency of the found configuration across the p grid; the zero
  // crossing marks its critical exponent
  if (!opts.curve.empty()) {
    if (!cert)
      throw rlab::ValidationError(
          "--curve needs a violation certificate; none was found");
    rlab::RunManifest curve_manifest = manifest;
    curve_manifest.command = "search curve";
    write_curve(opts.curve, curve_manifest, space, cert->config, opts.curve_step,
                8.0, opts.curve_step);
  }
}

// ---------------------------------------------------------------------------
// gen

struct GenOpts {
  std::string out;
  std::string edges_out;
  int rank = 2;
  int radius = 2;
  int n = 3;
  std::vector<int> dims;
  double p = 1.5;
  int dim = 3;
  int count = 8;
  std::uint64_t seed = 0;
  std::string graph_file;
};

void emit_generated(const std::string& command, const GenOpts& opts,
                    const json& parameters, const rlab::FiniteMetricSpace& space,
                    const rlab::Graph* graph, double runtime) {
  rlab::RunManifest manifest;
  manifest.command = command;
  manifest.parameters = parameters;
  manifest.seed = opts.seed;
  manifest.tool_version = rlab::kToolVersion;
  manifest.wall_clock_ms = runtime;

  json out = rlab::space_to_json(space);
  out["manifest"] = rlab::manifest_to_json(manifest);
  write_json_output(opts.out, out);
  if (!opts.edges_out.empty()) {
    if (!graph)
      throw rlab::ValidationError("--edges is only available for graph families");
    rlab::save_edge_list(*graph, opts.edges_out);
  }
}

// ---------------------------------------------------------------------------
// embed

struct EmbedL1Opts {
  std::string graph_file;
  std::string out;
  int basepoint = 0;
};

void run_embed_l1(const EmbedL1Opts& opts) {
  Timer timer;
  rlab::Graph graph = rlab::load_edge_list(opts.graph_file);
  rlab::FiniteMetricSpace space = rlab::metric_from_graph(graph);
  rlab::HyperplaneSet hps = rlab::theta_classes(graph);
  rlab::L1Embedding emb = rlab::halfspace_embedding(graph, hps, opts.basepoint);
  rlab::IsometryReport report = rlab::verify_isometry(emb, space);
  double runtime = timer.elapsed_ms();
  if (!report.isometric) {
    const auto& f = report.failures.front();
    throw rlab::ValidationError(
        "halfspace embedding is not isometric: d(" + graph.labels[f.v] + "," +
        graph.labels[f.w] + ") = " + std::to_string(f.distance) + " but |f(v)-f(w)|_1 = " +
        std::to_string(f.embedded_norm));
  }

  rlab::RunManifest manifest;
  manifest.command = "embed l1";
  manifest.parameters = {{"graph", opts.graph_file}, {"basepoint", opts.basepoint}};
  manifest.tool_version = rlab::kToolVersion;
  manifest.wall_clock_ms = runtime;
  manifest.input_hashes[opts.graph_file] = rlab::fnv1a_file_hash(opts.graph_file);

  json out;
  out["manifest"] = rlab::manifest_to_json(manifest);
  out["result"] = rlab::embedding_to_json(emb, hps, graph);
  out["result"]["isometric"] = true;
  write_json_output(opts.out, out);
}

struct EmbedGnsOpts {
  std::string space_file;
  std::string out;
  double p = 1.0;
  int basepoint = 0;
  double tol = 1e-9;
  bool force = false;
};

void run_embed_gns(const EmbedGnsOpts& opts) {
  Timer timer;
  rlab::FiniteMetricSpace space = rlab::load_space(opts.space_file, opts.force);
  rlab::Kernel kernel = rlab::power_transform(space, opts.p);
  double tol = std::max(opts.tol, rlab::default_negative_type_tolerance(kernel));
  rlab::EuclideanConfiguration config =
      rlab::gns_embed(kernel, opts.basepoint, tol);

  // reconstruction check: squared distances must reproduce the kernel
  double max_err = 0.0;
  const int n = space.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double sq = (config.points.row(i) - config.points.row(j)).squaredNorm();
      max_err = std::max(max_err, std::abs(sq - kernel.psi(i, j)));
    }
  double runtime = timer.elapsed_ms();

  rlab::RunManifest manifest;
  manifest.command = "embed gns";
  manifest.parameters = {{"space", opts.space_file},
                         {"p", opts.p},
                         {"basepoint", opts.basepoint},
                         {"tol", tol},
                         {"force", opts.force}};
  manifest.tool_version = rlab::kToolVersion;
  manifest.wall_clock_ms = runtime;
  manifest.input_hashes[opts.space_file] = rlab::fnv1a_file_hash(opts.space_file);

  json out;
  out["manifest"] = rlab::manifest_to_json(manifest);
  out["result"] = rlab::euclidean_to_json(config);
  out["result"]["p"] = opts.p;
  out["result"]["reconstruction_error"] = max_err;
  write_json_output(opts.out, out);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOpts {
  std::string family;
  std::string csv;
  int rank = 2;
  int min = 1;
  int max = 4;
  double tol = 1e-6;
  double p_max = 8.0;
  int jobs = 0;
};

void run_sweep(const SweepOpts& opts) {
  if (opts.min < 1 || opts.max < opts.min)
    throw std::invalid_argument("sweep: need 1 <= min <= max");

  struct Row {
    std::string text;
  };
  const int count = opts.max - opts.min + 1;
  std::vector<Row> rows(count);
  const int jobs = opts.jobs > 0 ? opts.jobs : default_jobs();

  Timer total;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int k = 0; k < count; ++k) {
    int param = opts.min + k;
    Timer timer;
    std::string space_id = opts.family + "(" + std::to_string(param) + ")";
    try {
      rlab::GeneratedSpace gen;
      if (opts.family == "zn") {
        gen = rlab::zn_ball(opts.rank, param);
        space_id = "zn_rank" + std::to_string(opts.rank) + "_r" + std::to_string(param);
      } else if (opts.family == "free") {
        gen = rlab::free_group_ball(opts.rank, param);
        space_id = "free_rank" + std::to_string(opts.rank) + "_r" + std::to_string(param);
      } else if (opts.family == "hypercube") {
        gen = rlab::hypercube(param);
        space_id = "hypercube_n" + std::to_string(param);
      } else if (opts.family == "grid") {
        gen = rlab::grid({param, param});
        space_id = "grid_" + std::to_string(param) + "x" + std::to_string(param);
      } else {
        throw std::invalid_argument("sweep: unknown family " + opts.family);
      }
      rlab::PStarResult res =
          rlab::generalized_roundness(gen.space, opts.tol, opts.p_max, false);
      rows[k].text = csv_row(space_id, gen.space.size(), format_p(res.p_star),
                             res.capped ? "true" : "false", opts.tol, opts.p_max,
                             timer.elapsed_ms(), 0);
    } catch (const rlab::SizeCapError& e) {
      rows[k].text = csv_row(space_id, 0, "nan", "size_cap", opts.tol, opts.p_max,
                             timer.elapsed_ms(), 0);
#pragma omp critical
      std::cerr << "sweep: " << e.what() << '\n';
    }
  }

  rlab::RunManifest manifest;
  manifest.command = "sweep";
  manifest.parameters = {{"family", opts.family}, {"rank", opts.rank},
                         {"min", opts.min},       {"max", opts.max},
                         {"tol", opts.tol},       {"pmax", opts.p_max},
                         {"jobs", jobs}};
  manifest.tool_version = rlab::kToolVersion;
  manifest.wall_clock_ms = total.elapsed_ms();

  std::vector<std::string> out_rows;
  for (const auto& row : rows) out_rows.push_back(row.text);
  append_csv(opts.csv, manifest, out_rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"roundness-lab: generalized roundness of finite metric spaces"};
  app.require_subcommand(1);

  // gr ----------------------------------------------------------------------
  GrOpts gr;
  auto* gr_cmd = app.add_subcommand("gr", "compute p* (generalized roundness)");
  gr_cmd->add_option("space", gr.space_file, "space JSON file")->required();
  gr_cmd->add_option("--tol", gr.tol, "bisection tolerance");
  gr_cmd->add_option("--pmax", gr.p_max, "exponent cap");
  gr_cmd->add_option("--seed", gr.seed, "seed recorded in outputs");
  gr_cmd->add_option("-o,--output", gr.out, "report JSON path (default stdout)");
  gr_cmd->add_option("--csv", gr.csv, "append a summary row to this CSV");
  gr_cmd->add_option("--space-id", gr.space_id, "row id (default: file stem)");
  gr_cmd->add_flag("--force", gr.force, "skip metric validation");
  gr_cmd->callback([&] { run_gr(gr); });

  // search ------------------------------------------------------------------
  SearchOpts search;
  auto* search_cmd = app.add_subcommand("search", "search for a violating 2n-gon");
  search_cmd->add_option("space", search.space_file, "space JSON file")->required();
  search_cmd->add_option("--p", search.p, "exponent to test")->required();
  search_cmd->add_option("--strategy", search.strategy,
                         "exhaustive | random | local");
  search_cmd->add_option("--budget", search.budget, "deficiency evaluations");
  search_cmd->add_option("--max-n", search.max_n, "largest gon size");
  search_cmd->add_option("--seed", search.seed, "search seed");
  search_cmd->add_option("--jobs", search.jobs, "worker count");
  search_cmd->add_option("-o,--output", search.out, "certificate JSON path");
  search_cmd->add_option("--curve", search.curve,
                         "also write the certificate's deficiency curve here");
  search_cmd->add_option("--curve-step", search.curve_step, "curve grid step");
  search_cmd->add_flag("--force", search.force, "skip metric validation");
  search_cmd->callback([&] { run_search(search); });

  // curve -------------------------------------------------------------------
  CurveOpts curve;
  auto* curve_cmd =
      app.add_subcommand("curve", "deficiency of a fixed 2n-gon over a p grid");
  curve_cmd->add_option("space", curve.space_file, "space JSON file")->required();
  curve_cmd->add_option("--a", curve.a, "comma-separated indices of side a")->required();
  curve_cmd->add_option("--b", curve.b, "comma-separated indices of side b")->required();
  curve_cmd->add_option("--pmin", curve.p_min, "grid start");
  curve_cmd->add_option("--pmax", curve.p_max, "grid end");
  curve_cmd->add_option("--step", curve.step, "grid step");
  curve_cmd->add_option("-o,--output", curve.out, "CSV path (default stdout)");
  curve_cmd->add_flag("--force", curve.force, "skip metric validation");
  curve_cmd->callback([&] { run_curve(curve); });

  // gen ---------------------------------------------------------------------
  GenOpts gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate example spaces");
  gen_cmd->require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", gen.out, "space JSON path (default stdout)");
  };
  auto add_edges_opt = [&](CLI::App* sub) {
    sub->add_option("--edges", gen.edges_out, "also write the edge list here");
  };

  auto* gen_zn = gen_cmd->add_subcommand("zn", "word-metric ball of Z^rank");
  gen_zn->add_option("--rank", gen.rank)->required();
  gen_zn->add_option("--radius", gen.radius)->required();
  add_common(gen_zn);
  add_edges_opt(gen_zn);
  gen_zn->callback([&] {
    Timer t;
    auto g = rlab::zn_ball(gen.rank, gen.radius);
    emit_generated("gen zn", gen, {{"rank", gen.rank}, {"radius", gen.radius}},
                   g.space, &g.graph, t.elapsed_ms());
  });

  auto* gen_free = gen_cmd->add_subcommand("free", "ball of a free group");
  gen_free->add_option("--rank", gen.rank)->required();
  gen_free->add_option("--radius", gen.radius)->required();
  add_common(gen_free);
  add_edges_opt(gen_free);
  gen_free->callback([&] {
    Timer t;
    auto g = rlab::free_group_ball(gen.rank, gen.radius);
    emit_generated("gen free", gen, {{"rank", gen.rank}, {"radius", gen.radius}},
                   g.space, &g.graph, t.elapsed_ms());
  });

  auto* gen_cube = gen_cmd->add_subcommand("hypercube", "0/1 cube skeleton");
  gen_cube->add_option("--n", gen.n)->required();
  add_common(gen_cube);
  add_edges_opt(gen_cube);
  gen_cube->callback([&] {
    Timer t;
    auto g = rlab::hypercube(gen.n);
    emit_generated("gen hypercube", gen, {{"n", gen.n}}, g.space, &g.graph,
                   t.elapsed_ms());
  });

  auto* gen_grid = gen_cmd->add_subcommand("grid", "box product of paths");
  gen_grid->add_option("--dims", gen.dims, "vertex counts per axis")->required();
  add_common(gen_grid);
  add_edges_opt(gen_grid);
  gen_grid->callback([&] {
    Timer t;
    auto g = rlab::grid(gen.dims);
    emit_generated("gen grid", gen, {{"dims", gen.dims}}, g.space, &g.graph,
                   t.elapsed_ms());
  });

  auto* gen_cycle = gen_cmd->add_subcommand("cycle", "cycle graph metric");
  gen_cycle->add_option("--n", gen.n)->required();
  add_common(gen_cycle);
  add_edges_opt(gen_cycle);
  gen_cycle->callback([&] {
    Timer t;
    auto g = rlab::cycle_graph(gen.n);
    emit_generated("gen cycle", gen, {{"n", gen.n}}, g.space, &g.graph,
                   t.elapsed_ms());
  });

  auto* gen_path = gen_cmd->add_subcommand("path", "path graph metric");
  gen_path->add_option("--n", gen.n)->required();
  add_common(gen_path);
  add_edges_opt(gen_path);
  gen_path->callback([&] {
    Timer t;
    auto g = rlab::path_graph(gen.n);
    emit_generated("gen path", gen, {{"n", gen.n}}, g.space, &g.graph,
                   t.elapsed_ms());
  });

  auto* gen_lp = gen_cmd->add_subcommand("lp", "uniform sample with p-norm metric");
  gen_lp->add_option("--p", gen.p)->required();
  gen_lp->add_option("--dim", gen.dim)->required();
  gen_lp->add_option("--count", gen.count)->required();
  gen_lp->add_option("--seed", gen.seed);
  add_common(gen_lp);
  gen_lp->callback([&] {
    Timer t;
    auto space = rlab::lp_sample(gen.dim, gen.count, gen.p, gen.seed);
    emit_generated("gen lp",
                   gen,
                   {{"p", gen.p}, {"dim", gen.dim}, {"count", gen.count}},
                   space, nullptr, t.elapsed_ms());
  });

  auto* gen_graph = gen_cmd->add_subcommand("graph", "BFS metric of an edge list");
  gen_graph->add_option("file", gen.graph_file, "edge list file")->required();
  add_common(gen_graph);
  gen_graph->callback([&] {
    Timer t;
    auto graph = rlab::load_edge_list(gen.graph_file);
    auto space = rlab::metric_from_graph(graph);
    emit_generated("gen graph", gen, {{"file", gen.graph_file}}, space, &graph,
                   t.elapsed_ms());
  });

  // embed -------------------------------------------------------------------
  auto* embed_cmd = app.add_subcommand("embed", "construct embeddings");
  embed_cmd->require_subcommand(1);

  EmbedL1Opts el1;
  auto* embed_l1 = embed_cmd->add_subcommand("l1", "hyperplane-counting l1 embedding");
  embed_l1->add_option("graph", el1.graph_file, "edge list file")->required();
  embed_l1->add_option("--basepoint", el1.basepoint, "basepoint vertex index");
  embed_l1->add_option("-o,--output", el1.out, "embedding JSON path");
  embed_l1->callback([&] { run_embed_l1(el1); });

  EmbedGnsOpts egns;
  auto* embed_gns = embed_cmd->add_subcommand("gns", "Euclidean realization of d^p");
  embed_gns->add_option("space", egns.space_file, "space JSON file")->required();
  embed_gns->add_option("--p", egns.p, "exponent")->required();
  embed_gns->add_option("--basepoint", egns.basepoint, "basepoint index");
  embed_gns->add_option("--tol", egns.tol, "eigenvalue clamp tolerance");
  embed_gns->add_flag("--force", egns.force, "skip metric validation");
  embed_gns->add_option("-o,--output", egns.out, "points JSON path");
  embed_gns->callback([&] { run_embed_gns(egns); });

  // sweep -------------------------------------------------------------------
  SweepOpts sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "p* across a generated family");
  sweep_cmd->add_option("--family", sweep.family, "zn | free | hypercube | grid")
      ->required();
  sweep_cmd->add_option("--rank", sweep.rank, "rank for zn/free");
  sweep_cmd->add_option("--min", sweep.min, "first radius / size")->required();
  sweep_cmd->add_option("--max", sweep.max, "last radius / size")->required();
  sweep_cmd->add_option("--tol", sweep.tol, "bisection tolerance");
  sweep_cmd->add_option("--pmax", sweep.p_max, "exponent cap");
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker pool size");
  sweep_cmd->add_option("--csv", sweep.csv, "CSV output path (default stdout)");
  sweep_cmd->callback([&] { run_sweep(sweep); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const rlab::SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const rlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
