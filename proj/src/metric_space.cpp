#include "rlab/metric_space.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

constexpr std::size_t kMaxReportedViolations = 64;

bool matrix_is_integral(const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double v = m(i, j);
      if (!(std::abs(v) < 9.007199254740992e15) || v != std::floor(v)) return false;
    }
  return true;
}

}  // namespace

const char* axiom_name(MetricAxiom axiom) {
  switch (axiom) {
    case MetricAxiom::ZeroDiagonal: return "zero_diagonal";
    case MetricAxiom::Symmetry: return "symmetry";
    case MetricAxiom::Positivity: return "positivity";
    case MetricAxiom::Triangle: return "triangle";
  }
  return "unknown";
}

MetricReport validate_metric(const Eigen::MatrixXd& dist) {
  if (dist.rows() != dist.cols())
    throw ValidationError("validate_metric: distance matrix must be square");
  const int n = static_cast<int>(dist.rows());
  MetricReport report;
  auto add = [&](MetricAxiom axiom, int i, int j, int k) {
    report.valid = false;
    if (report.violations.size() < kMaxReportedViolations)
      report.violations.push_back({axiom, i, j, k});
  };

  for (int i = 0; i < n; ++i)
    if (dist(i, i) != 0.0) add(MetricAxiom::ZeroDiagonal, i, i, -1);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (dist(i, j) != dist(j, i)) {
        add(MetricAxiom::Symmetry, i, j, -1);
      } else if (!(dist(i, j) > 0.0)) {
        add(MetricAxiom::Positivity, i, j, -1);
      }
    }

  // Triangle inequality: exact for integer matrices, absolute tolerance
  // 1e-9 otherwise.
  const double tri_tol = matrix_is_integral(dist) ? 0.0 : 1e-9;
  for (int i = 0; i < n && report.violations.size() < kMaxReportedViolations; ++i)
    for (int k = i + 1; k < n && report.violations.size() < kMaxReportedViolations; ++k)
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (dist(i, k) > dist(i, j) + dist(j, k) + tri_tol) {
          add(MetricAxiom::Triangle, i, k, j);
          break;
        }
      }
  return report;
}

double dist_pow(double d, double p) {
  if (d == 0.0) return 0.0;
  if (p == std::floor(p) && p >= 1.0 && p <= 64.0) {
    double r = 1.0;
    for (int e = 0; e < static_cast<int>(p); ++e) r *= d;
    return r;
  }
  return std::pow(d, p);
}

FiniteMetricSpace make_space(std::vector<std::string> labels, Eigen::MatrixXd dist) {
  if (dist.rows() != dist.cols())
    throw ValidationError("make_space: distance matrix must be square");
  if (static_cast<Eigen::Index>(labels.size()) != dist.rows())
    throw ValidationError("make_space: label count must match matrix size");
  FiniteMetricSpace space;
  space.labels = std::move(labels);
  if (matrix_is_integral(dist)) {
    space.int_dist = dist.cast<std::int64_t>();
  }
  space.dist = std::move(dist);
  return space;
}

FiniteMetricSpace make_space(std::vector<std::string> labels, IntMatrix dist) {
  if (dist.rows() != dist.cols())
    throw ValidationError("make_space: distance matrix must be square");
  if (static_cast<Eigen::Index>(labels.size()) != dist.rows())
    throw ValidationError("make_space: label count must match matrix size");
  FiniteMetricSpace space;
  space.labels = std::move(labels);
  space.dist = dist.cast<double>();
  space.int_dist = std::move(dist);
  return space;
}

Kernel make_kernel(Eigen::MatrixXd psi) {
  if (psi.rows() != psi.cols())
    throw std::invalid_argument("kernel matrix must be square");
  for (Eigen::Index i = 0; i < psi.rows(); ++i) {
    if (psi(i, i) != 0.0)
      throw std::invalid_argument("kernel diagonal must be zero");
    for (Eigen::Index j = i + 1; j < psi.cols(); ++j)
      if (psi(i, j) != psi(j, i))
        throw std::invalid_argument("kernel must be symmetric");
  }
  return Kernel{std::move(psi)};
}

Kernel power_transform(const FiniteMetricSpace& space, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("power_transform: p must be > 0");
  const int n = space.size();
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = space.dist(i, j);
      if (d < 0.0)
        throw std::invalid_argument("power_transform: negative distance");
      double v = dist_pow(d, p);
      psi(i, j) = v;
      psi(j, i) = v;
    }
  return Kernel{std::move(psi)};
}

FiniteMetricSpace restrict_space(const FiniteMetricSpace& space,
                                 const std::vector<int>& subset) {
  const int n = space.size();
  std::unordered_set<int> seen;
  for (int idx : subset) {
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("restrict_space: index out of range");
    if (!seen.insert(idx).second)
      throw std::invalid_argument("restrict_space: duplicate index");
  }
  const int m = static_cast<int>(subset.size());
  FiniteMetricSpace out;
  out.labels.reserve(m);
  for (int idx : subset) out.labels.push_back(space.labels[idx]);
  out.dist.resize(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.dist(i, j) = space.dist(subset[i], subset[j]);
  if (space.int_dist) {
    IntMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub(i, j) = (*space.int_dist)(subset[i], subset[j]);
    out.int_dist = std::move(sub);
  }
  return out;
}

}  // namespace rlab
