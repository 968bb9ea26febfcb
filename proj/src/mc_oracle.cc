#include "armafisher/mc_oracle.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "armafisher/error.h"
#include "armafisher/statespace.h"

namespace armafisher {

namespace {

// splitmix64 finalizer.
std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ReplicationSums {
  Matrix total;
  std::vector<Matrix> batch_means;
};

ReplicationSums RunReplication(const ScoreSystem& sys, const SimConfig& cfg,
                               std::uint64_t replication) {
  const Eigen::Index m = sys.F.rows();
  const double sigma = std::sqrt(cfg.model.sigma2);
  const double inv_sigma2 = 1.0 / cfg.model.sigma2;

  ReplicationSums out;
  out.total = Matrix::Zero(m, m);
  out.batch_means.reserve(kBatchesPerReplication);

  Vector xi = Vector::Zero(m);
  Vector next(m);
  Matrix batch = Matrix::Zero(m, m);
  int batch_index = 0;
  std::int64_t batch_start = 0;
  std::int64_t batch_end = static_cast<std::int64_t>(cfg.horizon) /
                           kBatchesPerReplication;
  const std::int64_t total_steps =
      static_cast<std::int64_t>(cfg.burn_in) + cfg.horizon;
  for (std::int64_t t = 0; t < total_steps; ++t) {
    const double eps = sigma * CounterNormal(cfg.seed, replication, t);
    next.noalias() = sys.F * xi;
    next += eps * sys.b_in;
    xi.swap(next);
    const std::int64_t s = t - cfg.burn_in;
    if (s < 0) continue;
    batch.noalias() += inv_sigma2 * (xi * xi.transpose());
    if (s + 1 == batch_end) {
      out.total += batch;
      out.batch_means.push_back(batch / static_cast<double>(batch_end - batch_start));
      batch.setZero();
      ++batch_index;
      batch_start = batch_end;
      batch_end = static_cast<std::int64_t>(cfg.horizon) * (batch_index + 1) /
                  kBatchesPerReplication;
    }
  }
  return out;
}

}  // namespace

double CounterNormal(std::uint64_t seed, std::uint64_t replication,
                     std::uint64_t step) {
  const std::uint64_t bits = Mix(Mix(Mix(seed) ^ replication) ^ step);
  // 53 random bits mapped to the open interval (0, 1).
  const double u = (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  static const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, u);
}

EmpiricalInfo SimulateScoreCovariance(const SimConfig& config) {
  if (config.horizon < 1000 || config.burn_in < 100 ||
      config.replications < 1) {
    throw Error(ErrorCode::kBadConfig,
                "simulation needs horizon >= 1000, burn-in >= 100 and at "
                "least one replication");
  }
  const ScoreSystem sys = BuildScoreSystem(config.model.ar, config.model.ma);
  const double rho = SpectralRadius(sys.F);
  if (!(rho < 1.0)) {
    throw Error(ErrorCode::kNotStable,
                "score recursion is not stable (spectral radius " +
                    std::to_string(rho) + ")");
  }

  const int reps = config.replications;
  std::vector<ReplicationSums> results(reps);
  int workers = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, reps);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int r = next++; r < reps; r = next++) {
      results[r] = RunReplication(sys, config, static_cast<std::uint64_t>(r));
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Ordered reduction by replication index.
  const Eigen::Index m = sys.F.rows();
  EmpiricalInfo info;
  info.samples = static_cast<std::int64_t>(config.horizon) * reps;
  info.mean = Matrix::Zero(m, m);
  for (const ReplicationSums& r : results) info.mean += r.total;
  info.mean /= static_cast<double>(info.samples);
  info.mean = 0.5 * (info.mean + info.mean.transpose()).eval();

  Matrix sq = Matrix::Zero(m, m);
  int batches = 0;
  for (const ReplicationSums& r : results) {
    for (const Matrix& bm : r.batch_means) {
      sq += (bm - info.mean).cwiseAbs2();
      ++batches;
    }
  }
  info.standard_error =
      (sq / (static_cast<double>(batches) * (batches - 1))).cwiseSqrt();
  return info;
}

double StationaryRecursionCheck(const ArmaModel& model, int steps) {
  if (steps < 0) {
    throw Error(ErrorCode::kBadConfig, "steps must be nonnegative");
  }
  const ScoreSystem sys = BuildScoreSystem(model.ar, model.ma);
  const Matrix fisher = FisherInformation(model);
  const Matrix drive = model.sigma2 * sys.b_in * sys.b_in.transpose();
  Matrix it = Matrix::Zero(sys.F.rows(), sys.F.cols());
  for (int t = 0; t < steps; ++t) it = sys.F * it * sys.F.transpose() + drive;
  return RelativeResidual(it / model.sigma2, fisher);
}

}  // namespace armafisher
