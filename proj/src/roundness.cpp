#include "rlab/roundness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rlab/errors.hpp"
#include "rlab/rng.hpp"

namespace rlab {

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "exhaustive") return SearchStrategy::Exhaustive;
  if (name == "random") return SearchStrategy::Random;
  if (name == "local") return SearchStrategy::Local;
  throw std::invalid_argument("unknown search strategy: " + name);
}

const char* strategy_name(SearchStrategy strategy) {
  switch (strategy) {
    case SearchStrategy::Exhaustive: return "exhaustive";
    case SearchStrategy::Random: return "random";
    case SearchStrategy::Local: return "local";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kExhaustivePairCap = 10'000'000;

void check_config(const FiniteMetricSpace& space, const GonConfiguration& config) {
  if (config.a.size() != config.b.size())
    throw std::invalid_argument("gon configuration sides must have equal size");
  if (config.a.size() < 2)
    throw std::invalid_argument("gon configuration needs n >= 2");
  const int n = space.size();
  for (int idx : config.a)
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("gon configuration index out of range");
  for (int idx : config.b)
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("gon configuration index out of range");
}

double deficiency_from_powers(const Eigen::MatrixXd& psi, const std::vector<int>& a,
                              const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  double within = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      within += psi(a[i], a[j]) + psi(b[i], b[j]);
  double cross = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cross += psi(a[i], b[j]);
  return cross - within;
}

// Spurious certificates from rounding noise at the negative-type boundary
// are cut off below this scale.
double violation_threshold(const Eigen::MatrixXd& psi, int max_n) {
  double scale = psi.size() > 0 ? psi.maxCoeff() : 0.0;
  return 1e-12 * std::max(1.0, static_cast<double>(max_n) * max_n * scale);
}

struct Candidate {
  double deficiency = std::numeric_limits<double>::infinity();
  GonConfiguration config;
  bool found = false;
};

void canonicalize(GonConfiguration& config) {
  std::sort(config.a.begin(), config.a.end());
  std::sort(config.b.begin(), config.b.end());
  if (std::lexicographical_compare(config.b.begin(), config.b.end(),
                                   config.a.begin(), config.a.end()))
    std::swap(config.a, config.b);
}

// Total order on candidates so reductions are deterministic regardless of
// scheduling: lower deficiency wins, ties break lexicographically.
bool better(const Candidate& lhs, const Candidate& rhs) {
  if (!rhs.found) return lhs.found;
  if (!lhs.found) return false;
  if (lhs.deficiency != rhs.deficiency) return lhs.deficiency < rhs.deficiency;
  if (lhs.config.a != rhs.config.a) return lhs.config.a < rhs.config.a;
  return lhs.config.b < rhs.config.b;
}

void consider(Candidate& best, double deficiency, const std::vector<int>& a,
              const std::vector<int>& b) {
  Candidate cand;
  cand.deficiency = deficiency;
  cand.config = GonConfiguration{a, b};
  canonicalize(cand.config);
  cand.found = true;
  if (better(cand, best)) best = std::move(cand);
}

// Non-decreasing index sequences of length n over [0, count): the multisets.
std::vector<std::vector<int>> enumerate_multisets(int count, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == count - 1) --pos;
    if (pos < 0) break;
    int v = cur[pos] + 1;
    for (int k = pos; k < n; ++k) cur[k] = v;
  }
  return out;
}

std::uint64_t multiset_count(int count, int n) {
  // C(count + n - 1, n), capped to avoid overflow
  long double c = 1.0L;
  for (int k = 1; k <= n; ++k) c = c * (count + k - 1) / k;
  if (c > 1e18L) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(c + 0.5L);
}

Candidate exhaustive_search(const Eigen::MatrixXd& psi, int max_n, double threshold,
                            bool parallel) {
  const int count = static_cast<int>(psi.rows());

  std::uint64_t total_pairs = 0;
  for (int n = 2; n <= max_n; ++n) {
    std::uint64_t c = multiset_count(count, n);
    std::uint64_t pairs =
        c > 100'000'000 ? std::numeric_limits<std::uint64_t>::max() : c * (c + 1) / 2;
    if (pairs > kExhaustivePairCap ||
        (total_pairs += pairs) > kExhaustivePairCap)
      throw SizeCapError("exhaustive search over " + std::to_string(count) +
                         " points up to n=" + std::to_string(max_n) +
                         " exceeds the 10^7 multiset-pair cap");
  }

  Candidate best;
  for (int n = 2; n <= max_n; ++n) {
    auto multisets = enumerate_multisets(count, n);
    const int m = static_cast<int>(multisets.size());
#pragma omp parallel if (parallel)
    {
      Candidate local;
#pragma omp for schedule(dynamic, 16)
      for (int ia = 0; ia < m; ++ia) {
        for (int ib = ia; ib < m; ++ib) {
          double def = deficiency_from_powers(psi, multisets[ia], multisets[ib]);
          if (def < -threshold) consider(local, def, multisets[ia], multisets[ib]);
        }
      }
#pragma omp critical
      {
        if (better(local, best)) best = local;
      }
    }
  }
  return best;
}

Candidate random_worker(const Eigen::MatrixXd& psi, int max_n, double threshold,
                        std::uint64_t seed, std::uint64_t evals) {
  const int count = static_cast<int>(psi.rows());
  Rng rng(seed);
  std::vector<int> a, b;
  Candidate best;
  for (std::uint64_t e = 0; e < evals; ++e) {
    int n = 2 + rng.index(max_n - 1);
    a.resize(n);
    b.resize(n);
    for (int k = 0; k < n; ++k) a[k] = rng.index(count);
    for (int k = 0; k < n; ++k) b[k] = rng.index(count);
    double def = deficiency_from_powers(psi, a, b);
    if (def < -threshold) consider(best, def, a, b);
  }
  return best;
}

// Hill-climb by single-index replacement, restart on stagnation.
Candidate local_worker(const Eigen::MatrixXd& psi, int max_n, double threshold,
                       std::uint64_t seed, std::uint64_t budget) {
  const int count = static_cast<int>(psi.rows());
  Rng rng(seed);
  Candidate best;
  std::uint64_t evals = 0;
  std::vector<int> a, b;
  while (evals < budget) {
    int n = 2 + rng.index(max_n - 1);
    a.resize(n);
    b.resize(n);
    for (int k = 0; k < n; ++k) a[k] = rng.index(count);
    for (int k = 0; k < n; ++k) b[k] = rng.index(count);
    double current = deficiency_from_powers(psi, a, b);
    ++evals;
    if (current < -threshold) consider(best, current, a, b);

    bool improved = true;
    while (improved && evals < budget) {
      improved = false;
      int best_side = -1, best_pos = -1, best_val = -1;
      double best_def = current;
      for (int side = 0; side < 2 && evals < budget; ++side) {
        std::vector<int>& vec = side == 0 ? a : b;
        for (int pos = 0; pos < n && evals < budget; ++pos) {
          int original = vec[pos];
          for (int val = 0; val < count && evals < budget; ++val) {
            if (val == original) continue;
            vec[pos] = val;
            double def = deficiency_from_powers(psi, a, b);
            ++evals;
            if (def < best_def) {
              best_def = def;
              best_side = side;
              best_pos = pos;
              best_val = val;
            }
          }
          vec[pos] = original;
        }
      }
      if (best_side >= 0) {
        (best_side == 0 ? a : b)[best_pos] = best_val;
        current = best_def;
        improved = true;
        if (current < -threshold) consider(best, current, a, b);
      }
    }
  }
  return best;
}

std::optional<ViolationCertificate> search_impl(const FiniteMetricSpace& space,
                                                const SearchParams& params,
                                                bool parallel) {
  if (!(params.p > 0.0)) throw std::invalid_argument("search: p must be > 0");
  if (params.max_n < 2) throw std::invalid_argument("search: max_n must be >= 2");
  if (params.budget == 0) throw std::invalid_argument("search: budget must be > 0");
  if (space.size() < 1) throw std::invalid_argument("search: empty space");

  Eigen::MatrixXd psi = power_transform(space, params.p).psi;
  double threshold = violation_threshold(psi, params.max_n);

  Candidate best;
  if (params.strategy == SearchStrategy::Exhaustive) {
    best = exhaustive_search(psi, params.max_n, threshold, parallel);
  } else {
    const int workers = std::max(1, params.jobs);
    std::vector<Candidate> results(workers);
    std::uint64_t base = params.budget / workers;
    std::uint64_t rem = params.budget % workers;
#pragma omp parallel for schedule(static, 1) if (parallel)
    for (int w = 0; w < workers; ++w) {
      std::uint64_t evals = base + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
      std::uint64_t seed = params.seed + static_cast<std::uint64_t>(w);
      results[w] = params.strategy == SearchStrategy::Random
                       ? random_worker(psi, params.max_n, threshold, seed, evals)
                       : local_worker(psi, params.max_n, threshold, seed, evals);
    }
    for (const Candidate& cand : results)
      if (better(cand, best)) best = cand;
  }

  if (!best.found) return std::nullopt;
  ViolationCertificate cert;
  cert.config = best.config;
  cert.p = params.p;
  cert.deficiency = best.deficiency;
  return cert;
}

}  // namespace

double gon_deficiency(const FiniteMetricSpace& space, const GonConfiguration& config,
                      double p) {
  if (!(p > 0.0)) throw std::invalid_argument("gon_deficiency: p must be > 0");
  check_config(space, config);
  const int n = static_cast<int>(config.a.size());
  double within = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      within += dist_pow(space.dist(config.a[i], config.a[j]), p) +
                dist_pow(space.dist(config.b[i], config.b[j]), p);
  double cross = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cross += dist_pow(space.dist(config.a[i], config.b[j]), p);
  return cross - within;
}

std::optional<ViolationCertificate> search_violation(const FiniteMetricSpace& space,
                                                     const SearchParams& params) {
  return search_impl(space, params, true);
}

std::optional<ViolationCertificate> search_violation_serial(
    const FiniteMetricSpace& space, const SearchParams& params) {
  return search_impl(space, params, false);
}

PStarResult generalized_roundness(const FiniteMetricSpace& space, double tol,
                                  double p_max, bool validate) {
  PStarResult result = supremal_p(space, tol, p_max, validate);
  if (space.size() <= 12 && result.p_star > tol) {
    SearchParams params;
    params.p = result.p_star - tol;
    params.strategy = SearchStrategy::Exhaustive;
    params.budget = 1;
    params.max_n = 2;
    params.seed = 0;
    params.jobs = 1;
    if (auto cert = search_violation(space, params))
      throw std::logic_error(
          "generalized_roundness: exhaustive 2-gon violation found below p*; "
          "deficiency " +
          std::to_string(cert->deficiency));
  }
  return result;
}

}  // namespace rlab
