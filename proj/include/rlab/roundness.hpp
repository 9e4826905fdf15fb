#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlab/metric_space.hpp"
#include "rlab/negative_type.hpp"

namespace rlab {

// A 2n-gon: two size-n multisets of point indices. Repeats are allowed;
// rational coefficient vectors in the kernel formulation correspond to
// integer multiplicities here.
struct GonConfiguration {
  std::vector<int> a;
  std::vector<int> b;
};

struct ViolationCertificate {
  GonConfiguration config;
  double p = 0.0;
  double deficiency = 0.0;  // RHS - LHS of the gon inequality; negative
};

enum class SearchStrategy { Exhaustive, Random, Local };

SearchStrategy parse_strategy(const std::string& name);
const char* strategy_name(SearchStrategy strategy);

// sum_{i,j} d(a_i,b_j)^p - sum_{i<j} (d(a_i,a_j)^p + d(b_i,b_j)^p).
// Non-negative means the gon inequality holds for this configuration.
double gon_deficiency(const FiniteMetricSpace& space, const GonConfiguration& config,
                      double p);

struct SearchParams {
  double p = 2.0;
  SearchStrategy strategy = SearchStrategy::Exhaustive;
  std::uint64_t budget = 100000;  // deficiency evaluations (random/local)
  int max_n = 4;
  std::uint64_t seed = 0;
  int jobs = 1;  // worker count; results are reproducible per (seed, jobs)
};

// Best (most negative deficiency) violating configuration found, if any.
// Exhaustive enumerates every multiset pair up to max_n and is complete at
// that size; it refuses inputs whose pair count exceeds 10^7. Absence of a
// certificate is not a lower-bound proof; use supremal_p for that.
std::optional<ViolationCertificate> search_violation(const FiniteMetricSpace& space,
                                                     const SearchParams& params);
// Serial reference; returns identical results for identical params.
std::optional<ViolationCertificate> search_violation_serial(
    const FiniteMetricSpace& space, const SearchParams& params);

// supremal_p plus a cross-check on small spaces (<= 12 points): no
// exhaustive 2-gon violation may exist at p_star - tol.
PStarResult generalized_roundness(const FiniteMetricSpace& space, double tol = 1e-6,
                                  double p_max = 8.0, bool validate = true);

}  // namespace rlab
