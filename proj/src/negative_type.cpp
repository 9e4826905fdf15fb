#include "rlab/negative_type.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

// Exponents below this behave like the equilateral limit and are always of
// negative type; bisection certificates are never evaluated lower.
constexpr double kMinExponent = 1e-9;

void check_kernel(const Kernel& kernel) {
  const auto& psi = kernel.psi;
  if (psi.rows() != psi.cols())
    throw std::invalid_argument("kernel matrix must be square");
  for (Eigen::Index i = 0; i < psi.rows(); ++i) {
    if (psi(i, i) != 0.0)
      throw std::invalid_argument("kernel diagonal must be zero");
    for (Eigen::Index j = i + 1; j < psi.cols(); ++j)
      if (psi(i, j) != psi(j, i))
        throw std::invalid_argument("kernel must be symmetric");
  }
}

int bisection_iterations(double tol, double p_max) {
  int iters = static_cast<int>(std::ceil(std::log2(p_max / tol)));
  return std::clamp(iters, 1, 64);
}

}  // namespace

// Purely relative: an absolute floor would misclassify kernels scaled far
// below unit size and break scale invariance of p*.
double default_negative_type_tolerance(const Kernel& kernel) {
  double maxabs = kernel.size() > 0 ? kernel.psi.cwiseAbs().maxCoeff() : 0.0;
  return 1e-9 * std::max(maxabs, 1e-30);
}

NegTypeCertificate is_negative_type(const Kernel& kernel, double tol) {
  check_kernel(kernel);
  if (!(tol > 0.0)) throw std::invalid_argument("is_negative_type: tol must be > 0");
  const int n = kernel.size();
  NegTypeCertificate cert;
  cert.tol = tol;
  if (n <= 1) return cert;  // no mean-zero direction exists

  const auto& psi = kernel.psi;

  // Double centering M = P Psi P with P = I - J/n.
  Eigen::VectorXd row_mean = psi.rowwise().mean();
  double grand_mean = row_mean.mean();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = psi(i, j) - row_mean(i) - row_mean(j) + grand_mean;

  // Deflate the all-ones eigenvector: shift it strictly below the rest of
  // the spectrum so the top eigenpair lives in the hyperplane {sum l = 0}.
  double shift = -(2.0 + n * psi.cwiseAbs().maxCoeff());
  m.array() += shift / n;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("is_negative_type: eigensolver failed");
  Eigen::VectorXd top = solver.eigenvectors().col(n - 1);

  // Re-center exactly and recompute the Rayleigh quotient so the reported
  // extremal value and witness are consistent with each other.
  top.array() -= top.mean();
  double norm = top.norm();
  if (norm < 1e-14) {
    cert.extremal_value = solver.eigenvalues()(n - 1);
  } else {
    top /= norm;
    cert.extremal_value = top.dot(psi * top);
  }
  cert.is_negative_type = (cert.extremal_value <= tol);
  if (!cert.is_negative_type) cert.witness = top;
  return cert;
}

NegTypeCertificate is_negative_type(const Kernel& kernel) {
  return is_negative_type(kernel, default_negative_type_tolerance(kernel));
}

PStarResult supremal_p(const FiniteMetricSpace& space, double tol, double p_max,
                       bool validate) {
  if (!(tol > 0.0)) throw std::invalid_argument("supremal_p: tol must be > 0");
  if (!(p_max > 0.0)) throw std::invalid_argument("supremal_p: p_max must be > 0");
  if (validate) {
    MetricReport report = validate_metric(space.dist);
    if (!report.valid) {
      const auto& v = report.violations.front();
      std::ostringstream msg;
      msg << "supremal_p: input is not a metric (" << axiom_name(v.axiom)
          << " violated at indices " << v.i << "," << v.j;
      if (v.k >= 0) msg << "," << v.k;
      msg << ")";
      throw std::invalid_argument(msg.str());
    }
  }

  auto nt_at = [&](double p) {
    Kernel kernel = power_transform(space, std::max(p, kMinExponent));
    return is_negative_type(kernel, default_negative_type_tolerance(kernel));
  };

  PStarResult result;
  result.tol = tol;
  result.p_max = p_max;

  NegTypeCertificate at_cap = nt_at(p_max);
  if (at_cap.is_negative_type) {
    result.p_star = p_max;
    result.capped = true;
    result.lower_certificate = nt_at(p_max - tol);
    return result;
  }

  double lo = 0.0;  // negative type holds in the equilateral limit p -> 0+
  double hi = p_max;
  const int iters = bisection_iterations(tol, p_max);
  for (int it = 0; it < iters; ++it) {
    double mid = 0.5 * (lo + hi);
    if (nt_at(mid).is_negative_type)
      lo = mid;
    else
      hi = mid;
  }

  result.p_star = 0.5 * (lo + hi);
  result.capped = false;
  result.lower_certificate = nt_at(result.p_star - tol);
  result.upper_certificate = nt_at(result.p_star + tol);
  // The bisection endpoints are known-good evaluation points; fall back to
  // them if the fresh evaluations ever land on the wrong side.
  if (!result.lower_certificate.is_negative_type) result.lower_certificate = nt_at(lo);
  if (result.upper_certificate->is_negative_type) result.upper_certificate = nt_at(hi);
  return result;
}

Eigen::MatrixXd gram_from_kernel(const Kernel& kernel, int basepoint) {
  check_kernel(kernel);
  const int n = kernel.size();
  if (basepoint < 0 || basepoint >= n)
    throw std::invalid_argument("gram_from_kernel: basepoint out of range");
  const auto& psi = kernel.psi;
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram(i, j) = 0.5 * (psi(i, basepoint) + psi(j, basepoint) - psi(i, j));
  return gram;
}

EuclideanConfiguration gns_embed(const Kernel& kernel, int basepoint, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("gns_embed: tol must be > 0");
  Eigen::MatrixXd gram = gram_from_kernel(kernel, basepoint);
  const int n = kernel.size();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("gns_embed: eigensolver failed");
  Eigen::VectorXd eigs = solver.eigenvalues();

  double min_eig = n > 0 ? eigs(0) : 0.0;
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "gns_embed: kernel is not of negative type (Gram eigenvalue "
        << min_eig << " < -" << tol << ")";
    throw NotNegativeTypeError(min_eig, msg.str());
  }

  // Eigenvalues in [-tol, 0] are numerical noise and clamp to zero; the
  // basepoint null direction sits at machine-noise scale and is trimmed so
  // the embedding dimension stays <= n-1.
  double gram_scale = n > 0 ? std::max(1.0, gram.cwiseAbs().maxCoeff()) : 1.0;
  double rank_cut = 1e-12 * gram_scale;
  std::vector<int> kept;
  for (int k = 0; k < n; ++k)
    if (eigs(k) > rank_cut) kept.push_back(k);
  while (static_cast<int>(kept.size()) > n - 1) kept.erase(kept.begin());

  const int dim = static_cast<int>(kept.size());
  Eigen::MatrixXd points(n, dim);
  for (int c = 0; c < dim; ++c)
    points.col(c) = solver.eigenvectors().col(kept[c]) * std::sqrt(eigs(kept[c]));

  // Translate so the basepoint is exactly the origin; pairwise distances
  // are unchanged.
  Eigen::RowVectorXd base = points.row(basepoint);
  points.rowwise() -= base;

  EuclideanConfiguration config;
  config.points = std::move(points);
  config.basepoint_index = basepoint;
  return config;
}

double compression_lower_bound(double p_star) {
  if (p_star < 0.0)
    throw std::invalid_argument("compression_lower_bound: p_star must be >= 0");
  return 0.5 * p_star;
}

}  // namespace rlab
