#include "stmar/rng.hpp"

#include "stmar/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace stmar {

RandomStream::RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

RandomStream RandomStream::derive(std::uint64_t seed, std::uint64_t index) {
  return RandomStream(splitmix64(seed) ^ splitmix64(0x51ed2701a2b4c3d5ULL + index));
}

double RandomStream::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RandomStream::gaussian() { return normal_(engine_); }

double RandomStream::chi_squared(double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("chi_squared: dof must be positive");
  return std::chi_squared_distribution<double>(dof)(engine_);
}

double RandomStream::student_t_unit(double dof) {
  if (!(dof > 2.0)) throw std::invalid_argument("student_t_unit: dof must exceed 2");
  const double z = gaussian();
  const double w = chi_squared(dof);
  // z / sqrt(w/dof) is standard t; the factor sqrt((dof-2)/dof) makes it unit variance.
  return z * std::sqrt((dof - 2.0) / w);
}

int RandomStream::categorical(const Eigen::VectorXd& weights) {
  const double u = uniform();
  double acc = 0.0;
  const int m = static_cast<int>(weights.size());
  for (int i = 0; i < m; ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return m - 1;
}

}  // namespace stmar
