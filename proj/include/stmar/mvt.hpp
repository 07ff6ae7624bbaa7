#pragma once

#include <Eigen/Dense>

#include <vector>

#include "stmar/rng.hpp"

namespace stmar {

/// d-dimensional Student's t law t_d(mu, Gamma, nu) in the covariance
/// parameterization: E[X] = mu, Cov[X] = Gamma, degrees of freedom nu > 2.
/// The scale matrix of the textbook form is Sigma = ((nu-2)/nu) * Gamma.
///
/// Immutable after construction; the Cholesky factor of Gamma is cached so
/// density evaluation never forms Gamma^{-1}.
class MvtDistribution {
 public:
  /// Throws std::invalid_argument if dimensions disagree or dof <= 2, and a
  /// std::runtime_error if cov is not symmetric positive definite.
  MvtDistribution(Eigen::VectorXd mean, Eigen::MatrixXd cov, double dof);

  int dim() const { return static_cast<int>(mean_.size()); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }
  double dof() const { return dof_; }

  /// Lower Cholesky factor L with L L' = cov.
  const Eigen::MatrixXd& chol_lower() const { return chol_; }
  double log_det_cov() const { return log_det_; }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  double dof_;
  Eigen::MatrixXd chol_;
  double log_det_;
};

/// log t_d(x; mu, Gamma, nu). Computed in log space via lgamma and the
/// cached Cholesky factor. Throws std::domain_error on non-finite x.
double log_density(const MvtDistribution& dist, const Eigen::VectorXd& x);

/// Marginal law of the selected coordinates (zero-based, distinct,
/// nonempty). Same dof; sub-mean and sub-covariance.
MvtDistribution marginal(const MvtDistribution& dist, const std::vector<int>& indices);

/// Law of the remaining coordinates given X[cond_indices] = x2 (zero-based,
/// proper nonempty subset). The conditional dof is dof + |cond_indices|.
MvtDistribution conditional(const MvtDistribution& dist, const std::vector<int>& cond_indices,
                            const Eigen::VectorXd& x2);

/// n draws (rows) via the Gaussian / chi-square compound representation:
/// X = mu + Z / sqrt(W/nu) with Z ~ N(0, ((nu-2)/nu) Gamma), W ~ chisq(nu).
Eigen::MatrixXd sample(const MvtDistribution& dist, RandomStream& rng, int n);

}  // namespace stmar
