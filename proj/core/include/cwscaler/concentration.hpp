#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwscaler/exact_distribution.hpp"
#include "cwscaler/params.hpp"

namespace cw {

/// Non-asymptotic tail bound 2 exp(-t^2 / (4 (1 + beta))). Requires t >= 0,
/// beta >= 0.
double chatterjee_bound(double t, double beta);

/// Exact P(|m - tanh(beta (m + h))| >= beta/n + t/sqrt(n)) by summing the
/// lumped law over violating levels.
double exact_lhs_tail(const ExactMagnetizationDistribution& dist, double t);
double exact_lhs_tail(const ModelParams& params, double t);

/// Slope comparison at the fixed point, for beta > 1, h > 0:
/// ok means beta (1 - m0^2) < 1. m1 = sqrt((beta-1)/beta) is where the two
/// sides of the fixed-point equation have equal derivative; fL and fR are the
/// two sides evaluated there as functions of beta.
struct SlopeReport {
  double m0 = 0.0;
  double betaLimit = 0.0;  // beta (1 - m0^2)
  bool ok = false;
  double m1 = 0.0;
  double fL = 0.0;  // sqrt((beta-1) beta) + h beta
  double fR = 0.0;  // log(sqrt(beta) + sqrt(beta-1))
  bool m1BelowM0 = false;
  bool fLAboveFR = false;
};

SlopeReport check_slope(double beta, double h);

/// An interval [M1, M2] around m0 and a contraction factor iota0 such that
/// |m - tanh(beta (m + h))| >= iota0 |m - m0| holds on the whole interval.
/// margin is the minimum over the validation grid of
/// dK/dm = (1 - iota0) / (1 - m'^2) - beta with m' = m - iota0 (m - m0).
struct ConcentrationInterval {
  double iota0 = 0.0;
  double M1 = 0.0;
  double M2 = 0.0;
  double margin = 0.0;
};

/// Construction: M2 = 1 and M1 is the point where the zero-iota slope excess
/// 1/(1-m^2) - beta falls to half its value at m0; iota0 is then the largest
/// multiple of 2^-20 keeping dK/dm >= min(1e-3, half-excess/2) on a 1e4-point
/// grid of [M1, M2]. Requires beta > 1, h > 0.
ConcentrationInterval find_interval(const ModelParams& params);

/// t_n = (iota0 n^{delta - 1/2} - beta/n) sqrt(n).
double tail_threshold_t(double iota0, double beta, std::int64_t n, double delta);

/// Exact decay of n^alpha P(|eta| > n^delta) along a schedule of sizes.
/// The products are kept in log space: beyond n ~ 1e4 the probabilities
/// underflow double precision while their logs stay exact.
struct TailReport {
  double delta = 0.0;
  double iota0 = 0.0;
  std::vector<std::int64_t> nSchedule;
  std::vector<double> alphas;
  std::vector<double> logTails;                // log P(|eta| > n^delta) per n
  std::vector<std::vector<double>> logValues;  // [alpha][i] = alpha log n + logTail
  std::vector<std::vector<double>> values;     // exp(logValues); may underflow to 0
  std::vector<double> tN;
  std::vector<double> chatterjeeBounds;  // 2 exp(-tN^2 / (4 (1 + beta)))
};

TailReport tail_decay(const ModelParams& params, double delta, std::span<const double> alphas,
                      std::span<const std::int64_t> nSchedule);

}  // namespace cw
