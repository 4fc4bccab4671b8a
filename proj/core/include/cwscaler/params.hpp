#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cw {

/// Temperature regime of the model, derived from (beta, h) alone.
enum class Phase {
  Subcritical,    // beta > 1, h != 0
  Critical,       // beta == 1, h == 0
  Supercritical,  // beta < 1
  Boundary,       // the remaining edge cases (beta > 1 with h == 0, beta == 1 with h != 0)
};

const char* to_string(Phase p);

Phase classify_phase(double beta, double h);

/// Inverse temperature, external field and system size.
///
/// The phase label is a pure function of (beta, h); it is computed in the
/// constructor and never set independently. beta == 0 (infinite temperature)
/// is accepted: several degenerate checks use it.
struct ModelParams {
  double beta = 1.0;
  double h = 0.0;
  std::int64_t n = 1;
  Phase phase = Phase::Critical;

  ModelParams() = default;
  ModelParams(double beta_, double h_, std::int64_t n_ = 1);

  bool subcritical() const { return phase == Phase::Subcritical; }
};

/// Thrown when a request would exceed a configured resource cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cw
