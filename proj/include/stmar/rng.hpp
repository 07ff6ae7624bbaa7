#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace stmar {

/// Seeded random stream. One stream per thread of execution; every stochastic
/// routine in the library takes a stream (or a seed it derives streams from),
/// so results are reproducible given the seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Independent stream identified by (seed, index). Used for per-population,
  /// per-chunk and per-origin seeding.
  static RandomStream derive(std::uint64_t seed, std::uint64_t index);

  double uniform();                 ///< U[0,1)
  double gaussian();                ///< N(0,1)
  double chi_squared(double dof);   ///< dof > 0, need not be integer

  /// Student's t with `dof` degrees of freedom scaled to unit variance,
  /// i.e. a draw from t_1(0, 1, dof) in the covariance parameterization.
  /// Requires dof > 2.
  double student_t_unit(double dof);

  /// Index m with probability weights[m]; weights must sum to ~1.
  int categorical(const Eigen::VectorXd& weights);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace stmar
