#include "stmar/mvt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stmar {

namespace {

std::vector<int> complement_of(const std::vector<int>& indices, int d) {
  std::vector<bool> taken(static_cast<std::size_t>(d), false);
  for (int i : indices) taken[static_cast<std::size_t>(i)] = true;
  std::vector<int> rest;
  for (int i = 0; i < d; ++i)
    if (!taken[static_cast<std::size_t>(i)]) rest.push_back(i);
  return rest;
}

void check_index_set(const std::vector<int>& indices, int d) {
  if (indices.empty()) throw std::invalid_argument("mvt: empty index set");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int i : indices) {
    if (i < 0 || i >= d) throw std::invalid_argument("mvt: index out of range");
    if (seen[static_cast<std::size_t>(i)]) throw std::invalid_argument("mvt: duplicate index");
    seen[static_cast<std::size_t>(i)] = true;
  }
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& a, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

Eigen::VectorXd subvector(const Eigen::VectorXd& v, const std::vector<int>& idx) {
  Eigen::VectorXd out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[idx[i]];
  return out;
}

}  // namespace

MvtDistribution::MvtDistribution(Eigen::VectorXd mean, Eigen::MatrixXd cov, double dof)
    : mean_(std::move(mean)), cov_(std::move(cov)), dof_(dof) {
  const Eigen::Index d = mean_.size();
  if (d < 1 || cov_.rows() != d || cov_.cols() != d)
    throw std::invalid_argument("MvtDistribution: mean/cov dimension mismatch");
  if (!(dof_ > 2.0)) throw std::invalid_argument("MvtDistribution: dof must exceed 2");
  if (!mean_.allFinite() || !cov_.allFinite())
    throw std::invalid_argument("MvtDistribution: non-finite parameters");
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("MvtDistribution: cov is not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(cov_);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("MvtDistribution: cov is not positive definite");
  chol_ = llt.matrixL();
  log_det_ = 2.0 * chol_.diagonal().array().log().sum();
}

double log_density(const MvtDistribution& dist, const Eigen::VectorXd& x) {
  if (x.size() != dist.dim()) throw std::invalid_argument("log_density: x has wrong length");
  if (!x.allFinite()) throw std::domain_error("log_density: non-finite x");
  const double d = static_cast<double>(dist.dim());
  const double nu = dist.dof();
  const Eigen::VectorXd u =
      dist.chol_lower().triangularView<Eigen::Lower>().solve(x - dist.mean());
  const double q = u.squaredNorm();
  return std::lgamma(0.5 * (d + nu)) - std::lgamma(0.5 * nu) -
         0.5 * d * std::log(std::numbers::pi * (nu - 2.0)) - 0.5 * dist.log_det_cov() -
         0.5 * (d + nu) * std::log1p(q / (nu - 2.0));
}

MvtDistribution marginal(const MvtDistribution& dist, const std::vector<int>& indices) {
  check_index_set(indices, dist.dim());
  return MvtDistribution(subvector(dist.mean(), indices),
                         submatrix(dist.cov(), indices, indices), dist.dof());
}

MvtDistribution conditional(const MvtDistribution& dist, const std::vector<int>& cond_indices,
                            const Eigen::VectorXd& x2) {
  const int d = dist.dim();
  check_index_set(cond_indices, d);
  if (static_cast<int>(cond_indices.size()) >= d)
    throw std::invalid_argument("conditional: conditioning set must be a proper subset");
  if (x2.size() != static_cast<Eigen::Index>(cond_indices.size()))
    throw std::invalid_argument("conditional: x2 has wrong length");
  if (!x2.allFinite()) throw std::domain_error("conditional: non-finite x2");

  const std::vector<int> free = complement_of(cond_indices, d);
  const Eigen::MatrixXd g11 = submatrix(dist.cov(), free, free);
  const Eigen::MatrixXd g12 = submatrix(dist.cov(), free, cond_indices);
  const Eigen::MatrixXd g22 = submatrix(dist.cov(), cond_indices, cond_indices);

  Eigen::LLT<Eigen::MatrixXd> llt22(g22);
  if (llt22.info() != Eigen::Success)
    throw std::runtime_error("conditional: conditioning block is not positive definite");

  const Eigen::VectorXd resid = x2 - subvector(dist.mean(), cond_indices);
  const Eigen::VectorXd g22inv_resid = llt22.solve(resid);
  const double q = resid.dot(g22inv_resid);

  const double nu = dist.dof();
  const double d2 = static_cast<double>(cond_indices.size());
  const Eigen::VectorXd mean = subvector(dist.mean(), free) + g12 * g22inv_resid;
  const Eigen::MatrixXd schur = g11 - g12 * llt22.solve(g12.transpose());
  const double factor = (nu - 2.0 + q) / (nu - 2.0 + d2);
  Eigen::MatrixXd cov = factor * 0.5 * (schur + schur.transpose());
  return MvtDistribution(mean, std::move(cov), nu + d2);
}

Eigen::MatrixXd sample(const MvtDistribution& dist, RandomStream& rng, int n) {
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  const int d = dist.dim();
  const double nu = dist.dof();
  // Cholesky factor of the scale matrix Sigma = ((nu-2)/nu) Gamma.
  const Eigen::MatrixXd scale_chol = std::sqrt((nu - 2.0) / nu) * dist.chol_lower();
  Eigen::MatrixXd out(n, d);
  Eigen::VectorXd z(d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) z[j] = rng.gaussian();
    const double w = rng.chi_squared(nu);
    out.row(i) =
        (dist.mean() + std::sqrt(nu / w) * (scale_chol * z)).transpose();
  }
  return out;
}

}  // namespace stmar
