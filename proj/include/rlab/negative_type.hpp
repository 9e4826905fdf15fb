#pragma once

#include <Eigen/Dense>
#include <optional>

#include "rlab/metric_space.hpp"

namespace rlab {

struct NegTypeCertificate {
  bool is_negative_type = true;
  // max of l^T Psi l over unit l with sum(l) = 0
  double extremal_value = 0.0;
  // maximizing direction; present exactly when is_negative_type is false
  std::optional<Eigen::VectorXd> witness;
  // eigenvalue threshold the decision used
  double tol = 0.0;
};

struct PStarResult {
  double p_star = 0.0;
  bool capped = false;
  double tol = 0.0;
  double p_max = 0.0;
  NegTypeCertificate lower_certificate;                 // evaluated at p_star - tol
  std::optional<NegTypeCertificate> upper_certificate;  // at p_star + tol; absent when capped
};

struct EuclideanConfiguration {
  Eigen::MatrixXd points;  // one row per point, dimension <= n - 1
  int basepoint_index = 0;
  int dimension() const { return static_cast<int>(points.cols()); }
};

// 1e-9 relative to the kernel's largest magnitude, so boundary cases
// (extremal value exactly 0) do not flap and rescaling a kernel rescales
// its threshold.
double default_negative_type_tolerance(const Kernel& kernel);

// Decides whether l^T Psi l <= 0 for every mean-zero l: center the kernel
// with P = I - J/n, deflate the all-ones direction below the spectrum, and
// take the top eigenpair of the result.
NegTypeCertificate is_negative_type(const Kernel& kernel, double tol);
NegTypeCertificate is_negative_type(const Kernel& kernel);

// Bisection over [0, p_max] against the monotone predicate
// "d^p is of negative type". The negative-type set of a finite space is a
// closed interval [0, p*], so p_star is reported as attained. capped=true
// (with p_star = p_max) means d^{p_max} is still of negative type.
PStarResult supremal_p(const FiniteMetricSpace& space, double tol = 1e-6,
                       double p_max = 8.0, bool validate = true);

// G[i][j] = (psi(i,b) + psi(j,b) - psi(i,j)) / 2. Positive semidefinite
// iff the kernel is of negative type.
Eigen::MatrixXd gram_from_kernel(const Kernel& kernel, int basepoint);

// Factors the Gram matrix into points whose squared Euclidean distances
// reproduce the kernel. Eigenvalues in [-tol, 0] are clamped to zero;
// anything below -tol raises NotNegativeTypeError.
EuclideanConfiguration gns_embed(const Kernel& kernel, int basepoint, double tol);

// p_star / 2: lower bound on equivariant Hilbert space compression.
double compression_lower_bound(double p_star);

}  // namespace rlab
