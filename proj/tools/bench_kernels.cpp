// Timing comparison of the OpenMP kernels against their serial reference
// implementations, with an agreement check on every pair.

#include <omp.h>

#include <cstdio>
#include <functional>
#include <string>

#include "rlab/cubical.hpp"
#include "rlab/generators.hpp"
#include "rlab/graph.hpp"
#include "rlab/roundness.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  double t0 = omp_get_wtime();
  fn();
  return (omp_get_wtime() - t0) * 1e3;
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s %10.2f ms %10.2f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    auto g = rlab::grid({70, 70});
    rlab::IntMatrix serial, parallel;
    double ts = time_ms([&] { serial = rlab::all_pairs_bfs_serial(g.graph); });
    double tp = time_ms([&] { parallel = rlab::all_pairs_bfs(g.graph); });
    report("all-pairs BFS (70x70 grid)", ts, tp,
           (serial.array() == parallel.array()).all());
  }

  {
    auto ball = rlab::zn_ball(2, 2);
    rlab::SearchParams params;
    params.p = 1.05;
    params.strategy = rlab::SearchStrategy::Exhaustive;
    params.max_n = 4;
    std::optional<rlab::ViolationCertificate> serial, parallel;
    double ts = time_ms([&] { serial = rlab::search_violation_serial(ball.space, params); });
    double tp = time_ms([&] { parallel = rlab::search_violation(ball.space, params); });
    bool match = serial.has_value() == parallel.has_value() &&
                 (!serial || (serial->deficiency == parallel->deficiency &&
                              serial->config.a == parallel->config.a &&
                              serial->config.b == parallel->config.b));
    report("exhaustive search (13 pts)", ts, tp, match);
  }

  {
    auto ball = rlab::zn_ball(2, 3);
    rlab::SearchParams params;
    params.p = 1.1;
    params.strategy = rlab::SearchStrategy::Random;
    params.budget = 2'000'000;
    params.max_n = 6;
    params.seed = 7;
    params.jobs = omp_get_max_threads();
    std::optional<rlab::ViolationCertificate> serial, parallel;
    double ts = time_ms([&] { serial = rlab::search_violation_serial(ball.space, params); });
    double tp = time_ms([&] { parallel = rlab::search_violation(ball.space, params); });
    bool match = serial.has_value() == parallel.has_value() &&
                 (!serial || serial->deficiency == parallel->deficiency);
    report("random search (25 pts)", ts, tp, match);
  }

  {
    auto ball = rlab::zn_ball(2, 3);
    rlab::SearchParams params;
    params.p = 1.1;
    params.strategy = rlab::SearchStrategy::Local;
    params.budget = 1'000'000;
    params.max_n = 6;
    params.seed = 7;
    params.jobs = omp_get_max_threads();
    std::optional<rlab::ViolationCertificate> serial, parallel;
    double ts = time_ms([&] { serial = rlab::search_violation_serial(ball.space, params); });
    double tp = time_ms([&] { parallel = rlab::search_violation(ball.space, params); });
    bool match = serial.has_value() == parallel.has_value() &&
                 (!serial || serial->deficiency == parallel->deficiency);
    report("local search (25 pts)", ts, tp, match);
  }

  {
    auto tree = rlab::free_group_ball(2, 5);
    auto hps = rlab::theta_classes(tree.graph);
    auto emb = rlab::halfspace_embedding(tree.graph, hps, 0);
    rlab::IsometryReport serial, parallel;
    double ts = time_ms([&] { serial = rlab::verify_isometry_serial(emb, tree.space); });
    double tp = time_ms([&] { parallel = rlab::verify_isometry(emb, tree.space); });
    report("isometry check (485 pts)", ts, tp,
           serial.isometric == parallel.isometric &&
               serial.failures.size() == parallel.failures.size());
  }

  return 0;
}
