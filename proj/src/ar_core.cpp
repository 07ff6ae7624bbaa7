#include "stmar/ar_core.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>

#include "stmar/mvt.hpp"

namespace stmar {

Eigen::MatrixXd companion_matrix(const Eigen::VectorXd& phi) {
  const Eigen::Index p = phi.size();
  if (p < 1) throw std::invalid_argument("companion_matrix: order must be at least 1");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(p, p);
  c.row(0) = phi.transpose();
  if (p > 1) c.block(1, 0, p - 1, p - 1).setIdentity();
  return c;
}

bool check_stationarity(const Eigen::VectorXd& phi, double margin) {
  if (phi.size() < 1) throw std::invalid_argument("check_stationarity: empty coefficient vector");
  if (!phi.allFinite()) throw std::invalid_argument("check_stationarity: non-finite coefficients");
  if (phi.size() == 1) return std::abs(phi[0]) < 1.0 - margin;
  const Eigen::VectorXcd eigs = companion_matrix(phi).eigenvalues();
  return (eigs.array().abs() < 1.0 - margin).all();
}

ComponentStationary stationary_moments(const ComponentParams& params) {
  const int p = params.order();
  if (p < 1) throw std::invalid_argument("stationary_moments: order must be at least 1");
  if (!(params.sigma2 > 0.0)) throw std::invalid_argument("stationary_moments: sigma2 must be positive");
  if (!(params.nu > 2.0)) throw std::invalid_argument("stationary_moments: nu must exceed 2");
  if (!check_stationarity(params.phi))
    throw std::invalid_argument("stationary_moments: phi outside the stationarity region");

  ComponentStationary out;
  out.phi0 = params.phi0;
  out.phi = params.phi;
  out.sigma2 = params.sigma2;
  out.nu = params.nu;

  if (p == 1) {
    // Closed form; the general path reduces to this but we keep it exact.
    const double ph = params.phi[0];
    out.gamma_p = Eigen::MatrixXd::Constant(1, 1, params.sigma2 / (1.0 - ph * ph));
  } else {
    const Eigen::MatrixXd phi_c = companion_matrix(params.phi);
    Eigen::MatrixXd sys = Eigen::MatrixXd::Identity(p * p, p * p) -
                          Eigen::kroneckerProduct(phi_c, phi_c);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(p * p);
    rhs[0] = params.sigma2;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys);
    if (lu.rcond() < 1e-13)
      throw std::runtime_error("stationary_moments: near-singular autocovariance system");
    const Eigen::VectorXd vec_gamma = lu.solve(rhs);
    Eigen::MatrixXd gamma = Eigen::Map<const Eigen::MatrixXd>(vec_gamma.data(), p, p);
    out.gamma_p = 0.5 * (gamma + gamma.transpose());
  }

  out.gamma_vec = out.gamma_p * params.phi;
  out.gamma0 = params.sigma2 + params.phi.dot(out.gamma_vec);
  out.mu = params.phi0 / (1.0 - params.phi.sum());

  out.gamma_pplus1.resize(p + 1, p + 1);
  out.gamma_pplus1(0, 0) = out.gamma0;
  out.gamma_pplus1.block(0, 1, 1, p) = out.gamma_vec.transpose();
  out.gamma_pplus1.block(1, 0, p, 1) = out.gamma_vec;
  out.gamma_pplus1.block(1, 1, p, p) = out.gamma_p;

  Eigen::LLT<Eigen::MatrixXd> llt(out.gamma_p);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("stationary_moments: Gamma_p is not positive definite");
  out.chol_gamma_p = llt.matrixL();
  out.log_det_gamma_p = 2.0 * out.chol_gamma_p.diagonal().array().log().sum();
  return out;
}

std::pair<double, double> cond_mean_var(const ComponentStationary& stat,
                                        const Eigen::VectorXd& z) {
  const int p = stat.order();
  if (z.size() != p) throw std::invalid_argument("cond_mean_var: lag vector has wrong length");
  const double mu_z = stat.phi0 + stat.phi.dot(z);
  const Eigen::VectorXd u = stat.chol_gamma_p.triangularView<Eigen::Lower>().solve(
      z - Eigen::VectorXd::Constant(p, stat.mu));
  const double q = u.squaredNorm();
  const double sigma2_z = (stat.nu - 2.0 + q) / (stat.nu - 2.0 + p) * stat.sigma2;
  return {mu_z, sigma2_z};
}

Eigen::VectorXd simulate_star(const ComponentParams& params, int T, RandomStream& rng,
                              const std::optional<Eigen::VectorXd>& init) {
  if (T < 1) throw std::invalid_argument("simulate_star: T must be at least 1");
  const ComponentStationary stat = stationary_moments(params);
  const int p = params.order();

  // lag holds (z_{t-1}, ..., z_{t-p}).
  Eigen::VectorXd lag(p);
  if (init) {
    if (init->size() != p) throw std::invalid_argument("simulate_star: presample has wrong length");
    lag = init->reverse();
  } else {
    const MvtDistribution stationary(Eigen::VectorXd::Constant(p, stat.mu), stat.gamma_p,
                                     stat.nu);
    lag = sample(stationary, rng, 1).row(0).transpose();
  }

  Eigen::VectorXd path(T);
  for (int t = 0; t < T; ++t) {
    const auto [mu_t, sigma2_t] = cond_mean_var(stat, lag);
    const double z = mu_t + std::sqrt(sigma2_t) * rng.student_t_unit(params.nu + p);
    path[t] = z;
    if (p > 1) {
      for (int i = p - 1; i > 0; --i) lag[i] = lag[i - 1];
    }
    lag[0] = z;
  }
  return path;
}

}  // namespace stmar
