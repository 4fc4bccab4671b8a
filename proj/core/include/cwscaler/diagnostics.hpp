#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cwscaler/exact_distribution.hpp"
#include "cwscaler/lumped_kernel.hpp"
#include "cwscaler/ou_params.hpp"
#include "cwscaler/path.hpp"
#include "cwscaler/rng.hpp"

namespace cw {

/// Analytic limits of the scaled local moments, from expanding the acceptance
/// log ratio around m0 and using atanh(m0) = beta (m0 + h):
///   n E_eta[Y - eta]   -> -2 ell eta
///   n E_eta[(Y-eta)^2] ->  sigma^2 = 4 (1 - |m0|).
struct MomentLimits {
  double driftLimit = 0.0;
  double secondMomentLimit = 0.0;
};

MomentLimits asymptotic_moment_oracle(const OUParams& ou, double eta);
MomentLimits asymptotic_moment_oracle(const ModelParams& params, double eta);

/// Kolmogorov distance between the exact law of eta and N(0, stationary
/// variance), evaluating the discrete CDF from both sides of every atom.
double ks_distance(const ExactMagnetizationDistribution& dist, double m0, const OUParams& ou);

/// Sup over grid points with |eta| <= n^delta of the local-moment errors.
/// The drift error is measured relative to the natural linear growth,
/// |drift + 2 ell eta| / (1 + |eta|); the second-moment error is plain
/// |secondMoment - sigma^2|. Both decay like n^{delta - 1/2}.
struct MomentErrorSup {
  double drift = 0.0;
  double secondMoment = 0.0;
};

MomentErrorSup moment_error_sup(const LumpedKernel& kernel, const OUParams& ou, double delta);

/// A C^2 test function with analytic first and second derivatives.
struct TestFunction {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> f1;
  std::function<double(double)> f2;
};

/// Gaussian-damped monomials eta^j exp(-eta^2/2), j = 0..3.
std::vector<TestFunction> default_test_functions();

/// sup over grid points with |eta| <= n^delta of |G_n phi - G phi| where
/// G phi = -2 ell eta phi' + sigma^2/2 phi''.
struct GeneratorDiscrepancy {
  double sup = 0.0;
  std::vector<std::pair<std::string, double>> perFunction;
};

GeneratorDiscrepancy generator_discrepancy(const LumpedKernel& kernel, const OUParams& ou,
                                           double delta, std::span<const TestFunction> fns);

/// Empirical vs analytic stationary autocovariance of a path, on a uniform
/// resampling grid, with batch-means standard errors.
struct AutocovPoint {
  double lag = 0.0;
  double empirical = 0.0;
  double analytic = 0.0;  // (sigma^2 / 4 ell) exp(-2 ell lag)
  double stderror = 0.0;
};

struct AutocovResult {
  std::vector<AutocovPoint> points;
  bool horizonWarning = false;  // horizon < 10 / ell
};

AutocovResult autocov_compare(const PathSample& path, const OUParams& ou,
                              std::span<const double> lags, double dt = 0.05, int batches = 20);

/// Settings for the one simulation-based entry in the report.
struct AutocovConfig {
  std::int64_t n = 10'000;
  double horizon = 200.0;
  std::vector<double> lags = {0.2, 0.5, 1.0};
  double dt = 0.1;
  int batches = 20;
  RngSpec rng;
};

struct PerNDiagnostics {
  std::int64_t n = 0;
  double variance = 0.0;  // exact Var(eta)
  double ks = 0.0;
  MomentErrorSup momentErrSup;
  double generatorErr = 0.0;
};

/// The quantitative face of the weak-convergence statement: exact variances,
/// Kolmogorov distances, local-moment and generator sup errors along an
/// n-schedule, plus one stationary CTMC autocovariance experiment.
struct ConvergenceReport {
  ModelParams base;  // beta, h (n ignored)
  double m0 = 0.0;
  OUParams ou;
  double delta = 0.3;
  std::vector<PerNDiagnostics> perN;
  AutocovConfig autocovConfig;
  std::vector<AutocovPoint> autocov;
  bool horizonWarning = false;
};

ConvergenceReport convergence_report(const ModelParams& base,
                                     std::span<const std::int64_t> nSchedule, double delta,
                                     const AutocovConfig& autocovConfig);

/// JSON rendering of the report (schema documented in the CLI help).
std::string to_json_string(const ConvergenceReport& report);

}  // namespace cw
