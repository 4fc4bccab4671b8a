#pragma once

#include <cstdint>
#include <optional>

#include "cwscaler/exact_distribution.hpp"
#include "cwscaler/lumped_kernel.hpp"
#include "cwscaler/ou_params.hpp"
#include "cwscaler/path.hpp"
#include "cwscaler/rng.hpp"
#include "cwscaler/spin_state.hpp"

namespace cw {

/// log pi(y)/pi(x) for flipping coordinate i, from the O(1) magnetization
/// update: -beta dH = -2 beta s (m + h) + 2 beta / n with s the current spin.
double mh_flip_log_ratio(const SpinState& state, std::int64_t i, const ModelParams& params);

/// One Metropolis step in place: uniform coordinate proposal, acceptance
/// min(1, exp(log ratio)); the up-count cache is maintained, the Hamiltonian
/// is never recomputed in full.
void mh_step(SpinState& state, const ModelParams& params, RngStream& rng);

/// Inverse-CDF draw of a level k from the exact lumped law.
std::int64_t sample_level(const ExactMagnetizationDistribution& dist, RngStream& rng);

/// Uniformly random configuration with exactly k up spins.
SpinState sample_spin_state_at_level(std::int64_t n, std::int64_t k, RngStream& rng);

/// Full-state Metropolis path recording eta = sqrt(n)(m - m0) every
/// recordEvery steps (step 0 included). Default start is stationary: a level
/// drawn from the exact law, then a uniform configuration at that level.
PathSample run_spin_chain(const ModelParams& params, double m0, std::int64_t steps,
                          RngStream& rng, std::int64_t recordEvery = 1,
                          std::optional<std::int64_t> startK = std::nullopt);

/// Discrete-time birth-death chain driven by the lumped kernel.
PathSample run_lumped_chain(const LumpedKernel& kernel, std::int64_t steps, RngStream& rng,
                            std::int64_t recordEvery = 1,
                            std::optional<std::int64_t> startK = std::nullopt);

/// Continuous-time chain jumping at rate n with the kernel's probabilities.
/// Self-loop (pStay) events are real events: they consume an exponential
/// holding time and are recorded without moving the state, keeping the event
/// rate exactly n. The path is a right-continuous step function.
PathSample run_ctmc(const LumpedKernel& kernel, double horizon, RngStream& rng,
                    std::optional<std::int64_t> startK = std::nullopt);

/// Exact OU transition over dt (no discretization error):
///   y e^{-2 ell dt} + sqrt(sigma^2 (1 - e^{-4 ell dt}) / (4 ell)) Z.
/// Requires dt > 0 and ou.ell > 0.
double ou_step(double y, double dt, const OUParams& ou, RngStream& rng);

/// Stationary-start OU path sampled on a uniform grid of step dt.
PathSample run_ou(const OUParams& ou, double horizon, double dt, RngStream& rng,
                  std::optional<double> y0 = std::nullopt);

}  // namespace cw
