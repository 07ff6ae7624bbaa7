#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>

#include "stmar/rng.hpp"

namespace stmar {

/// Parameters of one linear Student's-t autoregression: intercept phi0,
/// AR coefficients phi (order p), innovation variance sigma2 > 0, dof nu > 2.
struct ComponentParams {
  double phi0 = 0.0;
  Eigen::VectorXd phi;
  double sigma2 = 1.0;
  double nu = 3.0;

  int order() const { return static_cast<int>(phi.size()); }
};

/// p x p companion matrix of the AR polynomial: first row phi', identity below.
Eigen::MatrixXd companion_matrix(const Eigen::VectorXd& phi);

/// True iff every companion eigenvalue has modulus < 1 - margin, i.e. phi
/// lies (strictly) in the stationarity region S^p.
bool check_stationarity(const Eigen::VectorXd& phi, double margin = 1e-10);

/// Stationary moment quantities of one component, all derived from
/// (phi0, phi, sigma2, nu): process mean mu, the Toeplitz autocovariance
/// matrices Gamma_p and Gamma_{p+1}, gamma0 = Var, and the cross-covariance
/// vector gamma_p = Gamma_p * phi. The Cholesky factor of Gamma_p is cached
/// because the Gamma_p^{-1} quadratic form is evaluated for every observation.
struct ComponentStationary {
  double phi0 = 0.0;
  Eigen::VectorXd phi;
  double sigma2 = 1.0;
  double nu = 3.0;

  double mu = 0.0;
  Eigen::MatrixXd gamma_p;        // p x p
  double gamma0 = 0.0;
  Eigen::VectorXd gamma_vec;      // gamma_p = Gamma_p * phi
  Eigen::MatrixXd gamma_pplus1;   // (p+1) x (p+1)

  Eigen::MatrixXd chol_gamma_p;   // lower, L L' = Gamma_p
  double log_det_gamma_p = 0.0;

  int order() const { return static_cast<int>(phi.size()); }
};

/// Solves vec(Gamma_p) from the p^2 x p^2 system (I - Phi (x) Phi) vec = iota sigma2
/// and assembles the remaining stationary quantities.
/// Throws std::invalid_argument on a non-stationary phi and std::runtime_error
/// when the system is numerically singular (near-unit roots).
ComponentStationary stationary_moments(const ComponentParams& params);

/// Conditional mean and variance given the lag vector z = (z_{t-1},...,z_{t-p})
/// (most recent first): mu(z) = phi0 + phi'z and
/// sigma2(z) = (nu - 2 + q)/(nu - 2 + p) * sigma2 with q the Gamma_p^{-1}
/// quadratic form of z - mu 1_p.
std::pair<double, double> cond_mean_var(const ComponentStationary& stat,
                                        const Eigen::VectorXd& z);

/// Simulates T observations of the Student's-t autoregression. When no
/// presample is given the initial lag vector is drawn from the stationary
/// t_p(mu 1_p, Gamma_p, nu) law, giving an exactly stationary path.
/// `init`, when present, holds the p presample values in time order
/// (oldest first).
Eigen::VectorXd simulate_star(const ComponentParams& params, int T, RandomStream& rng,
                              const std::optional<Eigen::VectorXd>& init = std::nullopt);

}  // namespace stmar
