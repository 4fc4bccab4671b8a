#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cwscaler/params.hpp"

namespace cw {

/// Exact law of the up-spin count k under the Gibbs measure, obtained by
/// lumping the 2^n states that share a magnetization level:
///   P(k) ∝ C(n,k) exp(n beta (m_k^2/2 + h m_k)),  m_k = (2k-n)/n.
/// Everything is assembled in log space; probs[k] = exp(logWeights[k] - logZ).
/// In the far tails probs can underflow to zero in double precision; the
/// log-space fields stay finite and are what tail computations use.
struct ExactMagnetizationDistribution {
  ModelParams params;
  std::vector<double> logWeights;  // log C(n,k) + n beta (m^2/2 + h m)
  double logZ = 0.0;
  std::vector<double> probs;

  double m_of(std::int64_t k) const {
    return static_cast<double>(2 * k - params.n) / static_cast<double>(params.n);
  }
  double eta_of(std::int64_t k, double m0) const;
  double log_prob(std::int64_t k) const { return logWeights[static_cast<std::size_t>(k)] - logZ; }
};

inline constexpr std::int64_t kDefaultExactDistributionCap = 10'000'000;

/// Builds the exact lumped law. n above the cap raises resource_error.
ExactMagnetizationDistribution exact_distribution(
    const ModelParams& params, std::int64_t maxN = kDefaultExactDistributionCap);

/// Moments and tail functionals of eta = sqrt(n) (m - m0) under the exact law.
/// The callables own a snapshot of the distribution and stay valid after the
/// source object is gone.
struct EtaStatistics {
  double mean = 0.0;
  double variance = 0.0;
  std::function<double(double)> tail;           // P(|eta| >= c), exact sum
  std::function<double(double)> logTailStrict;  // log P(|eta| > c), log-sum-exp
};

EtaStatistics eta_statistics(const ExactMagnetizationDistribution& dist, double m0);

}  // namespace cw
