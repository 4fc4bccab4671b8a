#pragma once

#include "cwscaler/params.hpp"

namespace cw {

/// Coefficients of the limiting diffusion dY = -2 ell Y dt + sigma dB:
///   sigma = 2 sqrt(1 - |m0|),  ell = 1/(1 + |m0|) - beta (1 - |m0|),
/// with stationary variance sigma^2 / (4 ell). ell > 0 throughout the
/// subcritical phase (a consequence of beta (1 - m0^2) < 1).
struct OUParams {
  double ell = 0.0;
  double sigma = 0.0;
  double stationaryVariance = 0.0;
  double m0 = 0.0;
};

/// Pure formula evaluation; stationaryVariance is sigma^2/(4 ell) whatever the
/// sign of ell (callers validating the phase should use ou_params below).
OUParams ou_params_from_m0(double beta, double m0);

/// Solves for m0 and evaluates the formulas. Throws std::domain_error unless
/// the params are subcritical (beta > 1, h != 0), and std::logic_error if the
/// computed ell fails to be positive.
OUParams ou_params(const ModelParams& params);

}  // namespace cw
