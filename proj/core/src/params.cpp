#include "cwscaler/params.hpp"

#include <cmath>

namespace cw {

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Subcritical: return "subcritical";
    case Phase::Critical: return "critical";
    case Phase::Supercritical: return "supercritical";
    case Phase::Boundary: return "boundary";
  }
  return "unknown";
}

Phase classify_phase(double beta, double h) {
  if (beta > 1.0 && h != 0.0) return Phase::Subcritical;
  if (beta == 1.0 && h == 0.0) return Phase::Critical;
  if (beta < 1.0) return Phase::Supercritical;
  return Phase::Boundary;
}

ModelParams::ModelParams(double beta_, double h_, std::int64_t n_)
    : beta(beta_), h(h_), n(n_), phase(classify_phase(beta_, h_)) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("ModelParams: beta must be finite and >= 0, got " +
                                std::to_string(beta));
  }
  if (!std::isfinite(h)) {
    throw std::invalid_argument("ModelParams: h must be finite");
  }
  if (n < 1) {
    throw std::invalid_argument("ModelParams: n must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace cw
