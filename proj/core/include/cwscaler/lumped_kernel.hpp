#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cwscaler/params.hpp"

namespace cw {

struct EtaGridPoint {
  std::int64_t k = 0;
  double eta = 0.0;  // sqrt(n) (m - m0); neighbors differ by exactly 2/sqrt(n)
  double m = 0.0;    // (2k - n)/n
};

/// Birth-death transition probabilities of the single-flip Metropolis chain
/// lumped onto the n+1 magnetization levels. pStay absorbs the rejected and
/// the untaken proposals; boundary walls pUp[n] = pDown[0] = 0.
struct LumpedKernel {
  ModelParams params;
  double m0 = 0.0;
  std::vector<double> pUp;
  std::vector<double> pDown;
  std::vector<double> pStay;

  std::int64_t n() const { return params.n; }
  double m_of(std::int64_t k) const {
    return static_cast<double>(2 * k - params.n) / static_cast<double>(params.n);
  }
  double eta_of(std::int64_t k) const;
  EtaGridPoint grid_point(std::int64_t k) const { return {k, eta_of(k), m_of(k)}; }
};

/// Potential of the scaled chain: Phi(eta) = -eta^2/2 - sqrt(n) (m0 + h) eta.
/// beta [Phi(eta) - Phi(eta')] equals the Gibbs log ratio of the two levels.
double phi(double eta, const ModelParams& params, double m0);

/// Random-walk proposal mass: up (n-k)/n, down k/n (direction +1 / -1).
double proposal_prob(std::int64_t k, int direction, const ModelParams& params);

/// Assembles the kernel. Acceptance is computed in log space as
/// min(0, logratio), clamped at -745 before exponentiation; the log ratio
/// uses the closed form 2 beta (m + h +- 1/n), which is beta [Phi - Phi']
/// without the sqrt(n)-scale cancellation.
LumpedKernel build_kernel(const ModelParams& params, double m0);

/// Scaled one-step moments at a grid point:
///   drift        = n E[Y - eta]       = 2 sqrt(n) (pUp - pDown)
///   secondMoment = n E[(Y - eta)^2]   = 4 (pUp + pDown)
///   pMoment(p)   = n E[|Y - eta|^p]   = n (2/sqrt(n))^p (pUp + pDown)
struct LocalMoments {
  double eta = 0.0;
  double drift = 0.0;
  double secondMoment = 0.0;

  double pMoment(double p) const;  // requires p >= 2

  double jumpMass = 0.0;  // pUp + pDown
  double n = 0.0;
};

LocalMoments local_moments(const LumpedKernel& kernel, std::int64_t k);

/// Discrete generator action: n [pUp (f(eta + s) - f(eta)) + pDown (f(eta - s) - f(eta))]
/// with s = 2/sqrt(n).
double generator_apply(const LumpedKernel& kernel, const std::function<double(double)>& f,
                       std::int64_t k);

}  // namespace cw
