#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rlab {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// A finite metric space: n labeled points with a symmetric distance matrix.
// Graph-derived spaces also keep an exact integer copy of the matrix so that
// isometry checks can run in integer arithmetic.
struct FiniteMetricSpace {
  std::vector<std::string> labels;
  Eigen::MatrixXd dist;
  std::optional<IntMatrix> int_dist;

  int size() const { return static_cast<int>(dist.rows()); }
  bool has_integer_metric() const { return int_dist.has_value(); }
};

// Symmetric matrix with zero diagonal; a candidate negative-type kernel
// such as d^p.
struct Kernel {
  Eigen::MatrixXd psi;
  int size() const { return static_cast<int>(psi.rows()); }
};

enum class MetricAxiom { ZeroDiagonal, Symmetry, Positivity, Triangle };

const char* axiom_name(MetricAxiom axiom);

struct MetricViolation {
  MetricAxiom axiom;
  // Witness triple (i, j, k); k = -1 for the binary axioms. Triangle
  // witnesses are (i, k, j) with d(i,k) > d(i,j) + d(j,k).
  int i;
  int j;
  int k;
};

struct MetricReport {
  bool valid = true;
  std::vector<MetricViolation> violations;
};

// Checks the four metric axioms. Integer-valued matrices are compared
// exactly; floating input uses absolute tolerance 1e-9 on the triangle
// inequality. Throws ValidationError for a non-square matrix.
MetricReport validate_metric(const Eigen::MatrixXd& dist);

// d^p for a single distance; integer exponents are computed by repeated
// multiplication so integer metrics transform exactly.
double dist_pow(double d, double p);

FiniteMetricSpace make_space(std::vector<std::string> labels, Eigen::MatrixXd dist);
FiniteMetricSpace make_space(std::vector<std::string> labels, IntMatrix dist);

// Symmetry/zero-diagonal check on an arbitrary matrix; throws
// std::invalid_argument on failure.
Kernel make_kernel(Eigen::MatrixXd psi);

// psi[i][j] = dist[i][j]^p elementwise, p > 0.
Kernel power_transform(const FiniteMetricSpace& space, double p);

// Induced subspace on distinct in-range indices; labels carried over.
FiniteMetricSpace restrict_space(const FiniteMetricSpace& space,
                                 const std::vector<int>& subset);

}  // namespace rlab
