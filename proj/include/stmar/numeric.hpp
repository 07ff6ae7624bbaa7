#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace stmar {

/// Pairwise (cascade) summation. Deterministic for a fixed element order and
/// considerably more accurate than a running sum for long series.
double pairwise_sum(std::span<const double> values);

inline double pairwise_sum(const Eigen::VectorXd& v) {
  return pairwise_sum(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

/// log(sum(exp(x))) with the usual max shift.
double log_sum_exp(const Eigen::VectorXd& x);

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Resolve a requested worker count: n > 0 wins, then the STMAR_THREADS
/// environment variable, then hardware concurrency.
int resolve_threads(int requested);

/// Run fn(i) for i in [0, n) on up to `threads` workers. Tasks are indexed,
/// so any output written per index is independent of scheduling.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace stmar
