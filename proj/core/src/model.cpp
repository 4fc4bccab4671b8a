#include "cwscaler/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cw {

double hamiltonian(const SpinState& state, const ModelParams& params) {
  if (state.n() != params.n) {
    throw std::invalid_argument("hamiltonian: state has length " + std::to_string(state.n()) +
                                ", params.n = " + std::to_string(params.n));
  }
  const double n = static_cast<double>(params.n);
  const double m = state.magnetization();
  return -n * (0.5 * m * m + params.h * m);
}

double rate_function(double m, const ModelParams& params) {
  if (!(std::abs(m) < 1.0)) {
    throw std::domain_error("rate_function: m must lie in (-1, 1), got " + std::to_string(m));
  }
  const double entropy =
      0.5 * (1.0 - m) * std::log1p(-m) + 0.5 * (1.0 + m) * std::log1p(m);
  return -(0.5 * params.beta * m * m + params.beta * params.h * m) + entropy;
}

namespace {

double g_of(double m, double beta, double h) { return m - std::tanh(beta * (m + h)); }

double g_prime(double m, double beta, double h) {
  const double t = std::tanh(beta * (m + h));
  return 1.0 - beta * (1.0 - t * t);
}

// Bisection on a bracketing interval, then one Newton polish if it improves
// the residual (skipped near tangencies where g' ~ 0).
double refine_root(double lo, double hi, double beta, double h) {
  double glo = g_of(lo, beta, h);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g_of(mid, beta, h);
    if (gm == 0.0) return mid;
    if ((glo < 0.0) != (gm < 0.0)) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  double m = 0.5 * (lo + hi);
  const double gp = g_prime(m, beta, h);
  if (std::abs(gp) > 1e-8) {
    const double polished = m - g_of(m, beta, h) / gp;
    if (std::abs(polished) < 1.0 &&
        std::abs(g_of(polished, beta, h)) <= std::abs(g_of(m, beta, h))) {
      m = polished;
    }
  }
  return m;
}

}  // namespace

CwRoots solve_cw_roots(const ModelParams& params) {
  const double beta = params.beta;
  const double h = params.h;
  constexpr int kSubintervals = 10'000;
  const double lo = -1.0 + 1e-12;
  const double hi = 1.0 - 1e-12;

  CwRoots out;
  auto push_root = [&](double r) {
    for (double existing : out.roots) {
      if (std::abs(existing - r) < 1e-9) return;
    }
    out.roots.push_back(r);
  };

  double prevX = lo;
  double prevG = g_of(prevX, beta, h);
  if (prevG == 0.0) push_root(prevX);
  for (int i = 1; i <= kSubintervals; ++i) {
    const double x = lo + (hi - lo) * (static_cast<double>(i) / kSubintervals);
    const double g = g_of(x, beta, h);
    if (g == 0.0) {
      push_root(x);
    } else if (prevG != 0.0 && (prevG < 0.0) != (g < 0.0)) {
      push_root(refine_root(prevX, x, beta, h));
    }
    prevX = x;
    prevG = g;
  }

  // Tangent (double) roots produce no sign change; they can only sit where
  // g' = 0, i.e. tanh(beta(m+h)) = +-sqrt(1 - 1/beta), which exists for
  // beta > 1 only.
  if (beta > 1.0) {
    const double s = std::sqrt(1.0 - 1.0 / beta);
    for (double sign : {-1.0, +1.0}) {
      const double mc = std::atanh(sign * s) / beta - h;
      if (std::abs(mc) < 1.0 && std::abs(g_of(mc, beta, h)) < 1e-10) {
        bool nearExisting = false;
        for (double r : out.roots) nearExisting = nearExisting || std::abs(r - mc) < 1e-6;
        if (!nearExisting) {
          out.degenerate = true;
          push_root(mc);
        }
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end());
  out.rateValues.reserve(out.roots.size());
  for (double r : out.roots) out.rateValues.push_back(rate_function(r, params));

  std::size_t best = 0;
  for (std::size_t i = 1; i < out.rateValues.size(); ++i) {
    if (out.rateValues[i] < out.rateValues[best]) best = i;
  }
  // An exact tie between distinct roots (the +-m0 pair at h = 0): report the
  // positive branch and flag it so subcritical consumers can reject.
  for (std::size_t i = 0; i < out.rateValues.size(); ++i) {
    if (i != best && std::abs(out.rateValues[i] - out.rateValues[best]) <= 1e-10 &&
        std::abs(out.roots[i] - out.roots[best]) > 1e-6) {
      out.symmetricTie = true;
      if (out.roots[i] > out.roots[best]) best = i;
    }
  }
  out.m0 = out.roots[best];
  return out;
}

}  // namespace cw
