#include "cwscaler/lumped_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cwscaler/parallel.hpp"

namespace cw {

namespace {
// Double precision floor for exp; below this the acceptance is exactly zero.
constexpr double kLogFloor = -745.0;

double accept_from_log_ratio(double logRatio) {
  return std::exp(std::min(0.0, std::max(logRatio, kLogFloor)));
}
}  // namespace

double LumpedKernel::eta_of(std::int64_t k) const {
  return std::sqrt(static_cast<double>(params.n)) * (m_of(k) - m0);
}

double phi(double eta, const ModelParams& params, double m0) {
  const double sqn = std::sqrt(static_cast<double>(params.n));
  return -0.5 * eta * eta - sqn * (m0 + params.h) * eta;
}

double proposal_prob(std::int64_t k, int direction, const ModelParams& params) {
  if (k < 0 || k > params.n) {
    throw std::invalid_argument("proposal_prob: k = " + std::to_string(k) +
                                " outside [0, " + std::to_string(params.n) + "]");
  }
  if (direction > 0) {
    return static_cast<double>(params.n - k) / static_cast<double>(params.n);
  }
  return static_cast<double>(k) / static_cast<double>(params.n);
}

LumpedKernel build_kernel(const ModelParams& params, double m0) {
  const std::int64_t n = params.n;
  LumpedKernel ker;
  ker.params = params;
  ker.m0 = m0;
  ker.pUp.resize(static_cast<std::size_t>(n + 1));
  ker.pDown.resize(static_cast<std::size_t>(n + 1));
  ker.pStay.resize(static_cast<std::size_t>(n + 1));

  const double beta = params.beta;
  const double h = params.h;
  const double nd = static_cast<double>(n);

  parallel_for(0, n + 1, [&](std::int64_t k0, std::int64_t k1) {
    for (std::int64_t k = k0; k < k1; ++k) {
      const double m = static_cast<double>(2 * k - n) / nd;
      // Gibbs log ratios of the proposed level against the current one;
      // equal to beta [Phi(eta) - Phi(eta +- 2/sqrt(n))] without the
      // large-n cancellation of the Phi form.
      const double logUp = 2.0 * beta * (m + h + 1.0 / nd);
      const double logDown = -2.0 * beta * (m + h - 1.0 / nd);
      const double up = (k < n) ? (nd - static_cast<double>(k)) / nd * accept_from_log_ratio(logUp)
                                : 0.0;
      const double down = (k > 0) ? static_cast<double>(k) / nd * accept_from_log_ratio(logDown)
                                  : 0.0;
      ker.pUp[static_cast<std::size_t>(k)] = up;
      ker.pDown[static_cast<std::size_t>(k)] = down;
      ker.pStay[static_cast<std::size_t>(k)] = 1.0 - (up + down);
    }
  });
  return ker;
}

double LocalMoments::pMoment(double p) const {
  if (p < 2.0) {
    throw std::invalid_argument("LocalMoments::pMoment: p must be >= 2");
  }
  return n * std::pow(2.0 / std::sqrt(n), p) * jumpMass;
}

LocalMoments local_moments(const LumpedKernel& kernel, std::int64_t k) {
  if (k < 0 || k > kernel.n()) {
    throw std::invalid_argument("local_moments: k outside [0, n]");
  }
  const double nd = static_cast<double>(kernel.n());
  const double pu = kernel.pUp[static_cast<std::size_t>(k)];
  const double pd = kernel.pDown[static_cast<std::size_t>(k)];
  LocalMoments lm;
  lm.eta = kernel.eta_of(k);
  lm.drift = 2.0 * std::sqrt(nd) * (pu - pd);
  lm.secondMoment = 4.0 * (pu + pd);
  lm.jumpMass = pu + pd;
  lm.n = nd;
  return lm;
}

double generator_apply(const LumpedKernel& kernel, const std::function<double(double)>& f,
                       std::int64_t k) {
  const double nd = static_cast<double>(kernel.n());
  const double s = 2.0 / std::sqrt(nd);
  const double eta = kernel.eta_of(k);
  const double f0 = f(eta);
  double acc = 0.0;
  if (k < kernel.n()) acc += kernel.pUp[static_cast<std::size_t>(k)] * (f(eta + s) - f0);
  if (k > 0) acc += kernel.pDown[static_cast<std::size_t>(k)] * (f(eta - s) - f0);
  return nd * acc;
}

}  // namespace cw
