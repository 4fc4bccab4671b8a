#include "cwscaler/exact_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "cwscaler/numeric.hpp"
#include "cwscaler/parallel.hpp"

namespace cw {

double ExactMagnetizationDistribution::eta_of(std::int64_t k, double m0) const {
  return std::sqrt(static_cast<double>(params.n)) * (m_of(k) - m0);
}

ExactMagnetizationDistribution exact_distribution(const ModelParams& params, std::int64_t maxN) {
  const std::int64_t n = params.n;
  if (n > maxN) {
    throw resource_error("exact_distribution: n = " + std::to_string(n) +
                         " exceeds the cap " + std::to_string(maxN));
  }
  ExactMagnetizationDistribution dist;
  dist.params = params;
  dist.logWeights.resize(static_cast<std::size_t>(n + 1));
  dist.probs.resize(static_cast<std::size_t>(n + 1));

  const double beta = params.beta;
  const double h = params.h;
  const double nd = static_cast<double>(n);
  auto* lw = dist.logWeights.data();

  // Everything that feeds probability ratios is carried in double-double.
  // A single double rounds log-factorials at ulp(~n log n) and the Gibbs
  // exponent at ulp(~n beta); either alone would eat the whole 1e-12
  // detailed-balance budget from n ~ 1e3 on.
  std::vector<DD> logFact(static_cast<std::size_t>(n + 1));
  {
    DD acc{0.0, 0.0};
    for (std::int64_t j = 1; j <= n; ++j) {
      acc = dd_add(acc, std::log(static_cast<double>(j)));
      logFact[static_cast<std::size_t>(j)] = acc;
    }
  }

  std::vector<double> lwLo(static_cast<std::size_t>(n + 1), 0.0);
  parallel_for(0, n + 1, [&](std::int64_t k0, std::int64_t k1) {
    for (std::int64_t k = k0; k < k1; ++k) {
      // Grouped so the combinatorial term is bitwise symmetric in k <-> n-k.
      const DD logChoose =
          dd_add(logFact[static_cast<std::size_t>(n)],
                 dd_neg(dd_add(logFact[static_cast<std::size_t>(k)],
                               logFact[static_cast<std::size_t>(n - k)])));
      const double s = static_cast<double>(2 * k - n);  // exact
      const DD s2 = two_prod(s, s);
      const DD q = div_rem(s2.hi, 2.0 * nd);  // S^2 / (2n) = n m^2 / 2
      const DD r = two_prod(h, s);            // h S = n h m
      const DD u = two_sum(q.hi, r.hi);
      const double uLo = q.lo + r.lo + u.lo + s2.lo / (2.0 * nd);
      const DD v = two_prod(beta, u.hi);
      const DD w = dd_add(logChoose, DD{v.hi, beta * uLo + v.lo});
      lw[k] = w.hi;
      lwLo[static_cast<std::size_t>(k)] = w.lo;
    }
  });

  // Normalize with log-sum-exp. Reductions run over fixed-size chunks and the
  // partials combine in chunk order, so the result does not depend on the
  // thread count or schedule. The reference point is the arg-max entry.
  constexpr std::int64_t kChunk = 1 << 15;
  const std::int64_t nChunks = (n + 1 + kChunk - 1) / kChunk;
  std::vector<std::int64_t> chunkArgMax(static_cast<std::size_t>(nChunks), 0);
  parallel_for(0, nChunks, [&](std::int64_t c0, std::int64_t c1) {
    for (std::int64_t c = c0; c < c1; ++c) {
      const std::int64_t lo = c * kChunk;
      const std::int64_t hi = std::min<std::int64_t>(n + 1, lo + kChunk);
      std::int64_t best = lo;
      for (std::int64_t k = lo; k < hi; ++k) {
        if (lw[k] > lw[best]) best = k;
      }
      chunkArgMax[static_cast<std::size_t>(c)] = best;
    }
  });
  std::int64_t kMax = chunkArgMax[0];
  for (std::int64_t best : chunkArgMax) {
    if (lw[best] > lw[kMax]) kMax = best;
  }
  const double maxHi = lw[kMax];
  const double maxLo = lwLo[static_cast<std::size_t>(kMax)];

  // First pass writes exp(lw - maxLw) into probs, second divides by the sum.
  auto* probs = dist.probs.data();
  const double* lwLoPtr = lwLo.data();
  parallel_for(0, n + 1, [&](std::int64_t k0, std::int64_t k1) {
    for (std::int64_t k = k0; k < k1; ++k) {
      const DD d = two_sum(lw[k], -maxHi);
      probs[k] = std::exp(d.hi + (d.lo + (lwLoPtr[k] - maxLo)));
    }
  });
  std::vector<double> chunkSum(static_cast<std::size_t>(nChunks), 0.0);
  parallel_for(0, nChunks, [&](std::int64_t c0, std::int64_t c1) {
    for (std::int64_t c = c0; c < c1; ++c) {
      NeumaierSum s;
      const std::int64_t lo = c * kChunk;
      const std::int64_t hi = std::min<std::int64_t>(n + 1, lo + kChunk);
      for (std::int64_t k = lo; k < hi; ++k) s.add(probs[k]);
      chunkSum[static_cast<std::size_t>(c)] = s.value();
    }
  });
  NeumaierSum total;
  for (double s : chunkSum) total.add(s);
  const double sum = total.value();
  dist.logZ = (maxHi + maxLo) + std::log(sum);
  parallel_for(0, n + 1, [&](std::int64_t k0, std::int64_t k1) {
    for (std::int64_t k = k0; k < k1; ++k) probs[k] /= sum;
  });
  return dist;
}

namespace {

// Self-contained snapshot for the tail callables.
struct EtaSnapshot {
  std::int64_t n;
  double m0;
  std::vector<double> probs;
  std::vector<double> logProbs;

  double eta(std::int64_t k) const {
    const double m = static_cast<double>(2 * k - n) / static_cast<double>(n);
    return std::sqrt(static_cast<double>(n)) * (m - m0);
  }
};

}  // namespace

EtaStatistics eta_statistics(const ExactMagnetizationDistribution& dist, double m0) {
  if (!(std::abs(m0) < 1.0)) {
    throw std::invalid_argument("eta_statistics: m0 must lie in (-1, 1)");
  }
  const std::int64_t n = dist.params.n;

  auto snap = std::make_shared<EtaSnapshot>();
  snap->n = n;
  snap->m0 = m0;
  snap->probs = dist.probs;
  snap->logProbs.resize(dist.logWeights.size());
  for (std::size_t k = 0; k < dist.logWeights.size(); ++k) {
    snap->logProbs[k] = dist.logWeights[k] - dist.logZ;
  }

  EtaStatistics stats;
  NeumaierSum meanSum;
  for (std::int64_t k = 0; k <= n; ++k) {
    meanSum.add(snap->probs[static_cast<std::size_t>(k)] * snap->eta(k));
  }
  stats.mean = meanSum.value();
  NeumaierSum varSum;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double d = snap->eta(k) - stats.mean;
    varSum.add(snap->probs[static_cast<std::size_t>(k)] * d * d);
  }
  stats.variance = varSum.value();

  stats.tail = [snap](double c) {
    NeumaierSum s;
    for (std::int64_t k = 0; k <= snap->n; ++k) {
      if (std::abs(snap->eta(k)) >= c) s.add(snap->probs[static_cast<std::size_t>(k)]);
    }
    return s.value();
  };
  stats.logTailStrict = [snap](double c) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::int64_t k = 0; k <= snap->n; ++k) {
      if (std::abs(snap->eta(k)) > c) {
        mx = std::max(mx, snap->logProbs[static_cast<std::size_t>(k)]);
      }
    }
    if (!std::isfinite(mx)) return -std::numeric_limits<double>::infinity();
    NeumaierSum s;
    for (std::int64_t k = 0; k <= snap->n; ++k) {
      if (std::abs(snap->eta(k)) > c) {
        s.add(std::exp(snap->logProbs[static_cast<std::size_t>(k)] - mx));
      }
    }
    return mx + std::log(s.value());
  };
  return stats;
}

}  // namespace cw
