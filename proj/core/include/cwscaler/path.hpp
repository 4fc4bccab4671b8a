#pragma once

#include <vector>

namespace cw {

enum class PathKind {
  LumpedDtmc,  // discrete-time birth-death chain, time = step index
  CtmcRateN,   // rate-n continuous-time chain, time = event clock
  OuExact,     // exact Ornstein-Uhlenbeck transitions on a uniform grid
  SpinMh,      // full-state Metropolis chain, time = step index
};

const char* to_string(PathKind kind);

/// A recorded trajectory; times are strictly increasing and values carry eta
/// (or the OU state). For CtmcRateN the recorded times are the exponential
/// event clock, self-loop events included.
struct PathSample {
  PathKind kind = PathKind::LumpedDtmc;
  std::vector<double> times;
  std::vector<double> values;
};

}  // namespace cw
