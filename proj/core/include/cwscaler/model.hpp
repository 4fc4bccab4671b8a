#pragma once

#include <vector>

#include "cwscaler/params.hpp"
#include "cwscaler/spin_state.hpp"

namespace cw {

/// Energy of a configuration: H(x) = -n (m^2/2 + h m) with m the per-spin
/// average. Throws std::invalid_argument if the state length disagrees with
/// params.n.
double hamiltonian(const SpinState& state, const ModelParams& params);

/// Large-deviations rate functional
///   I(m) = -(beta m^2/2 + beta h m)
///          + (1-m)/2 log(1-m) + (1+m)/2 log(1+m),  m in (-1, 1).
/// Its stationary points are exactly the fixed points of m = tanh(beta(m+h)).
double rate_function(double m, const ModelParams& params);

/// Solutions of m = tanh(beta(m+h)) on (-1, 1).
struct CwRoots {
  std::vector<double> roots;       // sorted ascending
  std::vector<double> rateValues;  // rate_function at each root
  double m0 = 0.0;                 // root with minimal rate value
  bool symmetricTie = false;       // two global minimizers (+-m0 at h = 0, beta > 1)
  bool degenerate = false;         // a tangent (double) root was detected
};

/// Locates every sign change of g(m) = m - tanh(beta(m+h)) by scanning 1e4
/// uniform subintervals, bisecting to 1e-13 and applying one Newton polish.
/// m0 is the root minimizing the rate function; an exact tie (h = 0, beta > 1)
/// sets symmetricTie and reports the positive branch as m0.
CwRoots solve_cw_roots(const ModelParams& params);

}  // namespace cw
