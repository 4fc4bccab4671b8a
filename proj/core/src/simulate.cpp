#include "cwscaler/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cw {

const char* to_string(PathKind kind) {
  switch (kind) {
    case PathKind::LumpedDtmc: return "lumpedDTMC";
    case PathKind::CtmcRateN: return "ctmcRateN";
    case PathKind::OuExact: return "ouExact";
    case PathKind::SpinMh: return "spinMH";
  }
  return "unknown";
}

double mh_flip_log_ratio(const SpinState& state, std::int64_t i, const ModelParams& params) {
  const double n = static_cast<double>(params.n);
  const double m = state.magnetization();
  const double s = static_cast<double>(state.spins[static_cast<std::size_t>(i)]);
  return -2.0 * params.beta * s * (m + params.h) + 2.0 * params.beta / n;
}

void mh_step(SpinState& state, const ModelParams& params, RngStream& rng) {
  const std::int64_t i = rng.uniform_int(params.n);
  const double logRatio = mh_flip_log_ratio(state, i, params);
  bool accept = logRatio >= 0.0;
  if (!accept) accept = rng.uniform01() < std::exp(logRatio);
  if (accept) {
    auto& s = state.spins[static_cast<std::size_t>(i)];
    state.upCount += (s > 0) ? -1 : +1;
    s = static_cast<std::int8_t>(-s);
  }
}

std::int64_t sample_level(const ExactMagnetizationDistribution& dist, RngStream& rng) {
  const double u = rng.uniform01();
  double cum = 0.0;
  const std::int64_t n = dist.params.n;
  for (std::int64_t k = 0; k <= n; ++k) {
    cum += dist.probs[static_cast<std::size_t>(k)];
    if (u < cum) return k;
  }
  return n;
}

SpinState sample_spin_state_at_level(std::int64_t n, std::int64_t k, RngStream& rng) {
  std::vector<std::int8_t> spins(static_cast<std::size_t>(n), -1);
  for (std::int64_t i = 0; i < k; ++i) spins[static_cast<std::size_t>(i)] = +1;
  // Fisher-Yates keeps every k-subset equally likely.
  for (std::int64_t i = n - 1; i > 0; --i) {
    const std::int64_t j = rng.uniform_int(i + 1);
    std::swap(spins[static_cast<std::size_t>(i)], spins[static_cast<std::size_t>(j)]);
  }
  return SpinState{std::move(spins), k};
}

namespace {

double eta_of_count(std::int64_t k, std::int64_t n, double m0) {
  const double m = static_cast<double>(2 * k - n) / static_cast<double>(n);
  return std::sqrt(static_cast<double>(n)) * (m - m0);
}

}  // namespace

PathSample run_spin_chain(const ModelParams& params, double m0, std::int64_t steps,
                          RngStream& rng, std::int64_t recordEvery,
                          std::optional<std::int64_t> startK) {
  if (steps < 1) throw std::invalid_argument("run_spin_chain: steps must be >= 1");
  if (recordEvery < 1) throw std::invalid_argument("run_spin_chain: recordEvery must be >= 1");
  const std::int64_t n = params.n;
  std::int64_t k0;
  if (startK) {
    k0 = *startK;
    if (k0 < 0 || k0 > n) throw std::invalid_argument("run_spin_chain: startK outside [0, n]");
  } else {
    k0 = sample_level(exact_distribution(params), rng);
  }
  SpinState state = sample_spin_state_at_level(n, k0, rng);

  PathSample path;
  path.kind = PathKind::SpinMh;
  path.times.reserve(static_cast<std::size_t>(steps / recordEvery + 1));
  path.values.reserve(static_cast<std::size_t>(steps / recordEvery + 1));
  path.times.push_back(0.0);
  path.values.push_back(eta_of_count(state.upCount, n, m0));
  for (std::int64_t step = 1; step <= steps; ++step) {
    mh_step(state, params, rng);
    if (step % recordEvery == 0) {
      path.times.push_back(static_cast<double>(step));
      path.values.push_back(eta_of_count(state.upCount, n, m0));
    }
  }
  return path;
}

PathSample run_lumped_chain(const LumpedKernel& kernel, std::int64_t steps, RngStream& rng,
                            std::int64_t recordEvery, std::optional<std::int64_t> startK) {
  if (steps < 1) throw std::invalid_argument("run_lumped_chain: steps must be >= 1");
  if (recordEvery < 1) throw std::invalid_argument("run_lumped_chain: recordEvery must be >= 1");
  const std::int64_t n = kernel.n();
  std::int64_t k;
  if (startK) {
    k = *startK;
    if (k < 0 || k > n) throw std::invalid_argument("run_lumped_chain: startK outside [0, n]");
  } else {
    k = sample_level(exact_distribution(kernel.params), rng);
  }

  PathSample path;
  path.kind = PathKind::LumpedDtmc;
  path.times.reserve(static_cast<std::size_t>(steps / recordEvery + 1));
  path.values.reserve(static_cast<std::size_t>(steps / recordEvery + 1));
  path.times.push_back(0.0);
  path.values.push_back(kernel.eta_of(k));
  for (std::int64_t step = 1; step <= steps; ++step) {
    const double u = rng.uniform01();
    const double pu = kernel.pUp[static_cast<std::size_t>(k)];
    if (u < pu) {
      ++k;
    } else if (u < pu + kernel.pDown[static_cast<std::size_t>(k)]) {
      --k;
    }
    if (step % recordEvery == 0) {
      path.times.push_back(static_cast<double>(step));
      path.values.push_back(kernel.eta_of(k));
    }
  }
  return path;
}

PathSample run_ctmc(const LumpedKernel& kernel, double horizon, RngStream& rng,
                    std::optional<std::int64_t> startK) {
  if (!(horizon > 0.0)) throw std::invalid_argument("run_ctmc: horizon must be > 0");
  const std::int64_t n = kernel.n();
  std::int64_t k;
  if (startK) {
    k = *startK;
    if (k < 0 || k > n) throw std::invalid_argument("run_ctmc: startK outside [0, n]");
  } else {
    k = sample_level(exact_distribution(kernel.params), rng);
  }

  PathSample path;
  path.kind = PathKind::CtmcRateN;
  path.times.reserve(static_cast<std::size_t>(horizon * static_cast<double>(n) * 1.05) + 16);
  path.values.reserve(path.times.capacity());
  path.times.push_back(0.0);
  path.values.push_back(kernel.eta_of(k));
  const double rate = static_cast<double>(n);
  double t = 0.0;
  for (;;) {
    t += rng.exponential(rate);
    if (t > horizon) break;
    const double u = rng.uniform01();
    const double pu = kernel.pUp[static_cast<std::size_t>(k)];
    if (u < pu) {
      ++k;
    } else if (u < pu + kernel.pDown[static_cast<std::size_t>(k)]) {
      --k;
    }  // else: self-loop event, state unchanged
    path.times.push_back(t);
    path.values.push_back(kernel.eta_of(k));
  }
  return path;
}

double ou_step(double y, double dt, const OUParams& ou, RngStream& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("ou_step: dt must be > 0");
  if (!(ou.ell > 0.0)) {
    throw std::invalid_argument("ou_step: ell must be > 0 (mean-reverting regime)");
  }
  const double decay = std::exp(-2.0 * ou.ell * dt);
  const double sd =
      std::sqrt(ou.sigma * ou.sigma * (1.0 - decay * decay) / (4.0 * ou.ell));
  return y * decay + sd * rng.normal();
}

PathSample run_ou(const OUParams& ou, double horizon, double dt, RngStream& rng,
                  std::optional<double> y0) {
  if (!(horizon > 0.0) || !(dt > 0.0)) {
    throw std::invalid_argument("run_ou: horizon and dt must be > 0");
  }
  if (!(ou.ell > 0.0)) throw std::invalid_argument("run_ou: ell must be > 0");
  double y = y0 ? *y0 : std::sqrt(ou.stationaryVariance) * rng.normal();

  PathSample path;
  path.kind = PathKind::OuExact;
  const auto count = static_cast<std::size_t>(horizon / dt) + 1;
  path.times.reserve(count);
  path.values.reserve(count);
  path.times.push_back(0.0);
  path.values.push_back(y);
  for (std::size_t i = 1; static_cast<double>(i) * dt <= horizon + 1e-12; ++i) {
    y = ou_step(y, dt, ou, rng);
    path.times.push_back(static_cast<double>(i) * dt);
    path.values.push_back(y);
  }
  return path;
}

}  // namespace cw
