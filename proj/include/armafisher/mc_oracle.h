#pragma once

#include <cstdint>

#include "armafisher/fisher.h"
#include "armafisher/linalg.h"

namespace armafisher {

struct SimConfig {
  ArmaModel model;
  /// Retained steps per replication.
  int horizon = 100000;
  int burn_in = 2000;
  std::uint64_t seed = 0;
  int replications = 1;
  /// Worker threads for replications; 0 picks the hardware concurrency.
  /// Results do not depend on this value.
  int threads = 0;
};

struct EmpiricalInfo {
  /// Sample average of xi_t xi_t^T / sigma2.
  Matrix mean;
  /// Entrywise batch-means standard error of `mean`.
  Matrix standard_error;
  std::int64_t samples = 0;
};

/// Number of batches per replication used for the standard errors.
inline constexpr int kBatchesPerReplication = 50;

/// Standard normal draw determined by (seed, replication, step) alone.
double CounterNormal(std::uint64_t seed, std::uint64_t replication,
                     std::uint64_t step);

/// Simulates xi_{t+1} = F xi_t + b_in eps_t from xi_0 = 0 with Gaussian
/// eps_t ~ N(0, sigma2), discards burn_in steps and averages xi_t xi_t^T /
/// sigma2 over the horizon. Throws BadConfig (horizon < 1000, burn_in < 100,
/// replications < 1) or NotStable.
EmpiricalInfo SimulateScoreCovariance(const SimConfig& config);

/// Iterates i_{t+1} = F i_t F^T + sigma2 b_in b_in^T from i_0 = 0 and returns
/// ||i_steps / sigma2 - I||_F / ||I||_F.
double StationaryRecursionCheck(const ArmaModel& model, int steps);

}  // namespace armafisher
