#include "cwscaler/ou_params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cwscaler/model.hpp"

namespace cw {

OUParams ou_params_from_m0(double beta, double m0) {
  const double a = std::abs(m0);
  OUParams ou;
  ou.m0 = m0;
  ou.ell = 1.0 / (1.0 + a) - beta * (1.0 - a);
  ou.sigma = 2.0 * std::sqrt(1.0 - a);
  ou.stationaryVariance = ou.sigma * ou.sigma / (4.0 * ou.ell);
  return ou;
}

OUParams ou_params(const ModelParams& params) {
  if (!params.subcritical()) {
    throw std::domain_error(std::string("ou_params: requires the subcritical phase ") +
                            "(beta > 1, h != 0); got phase " + to_string(params.phase));
  }
  const CwRoots roots = solve_cw_roots(params);
  const OUParams ou = ou_params_from_m0(params.beta, roots.m0);
  if (!(ou.ell > 0.0)) {
    throw std::logic_error("ou_params: ell <= 0 in the subcritical phase (m0 = " +
                           std::to_string(roots.m0) + ")");
  }
  return ou;
}

}  // namespace cw
