#include "cwscaler/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cwscaler/model.hpp"
#include "cwscaler/numeric.hpp"
#include "cwscaler/simulate.hpp"

#include "json.hpp"

namespace cw {

MomentLimits asymptotic_moment_oracle(const OUParams& ou, double eta) {
  return {-2.0 * ou.ell * eta, ou.sigma * ou.sigma};
}

MomentLimits asymptotic_moment_oracle(const ModelParams& params, double eta) {
  return asymptotic_moment_oracle(ou_params(params), eta);
}

double ks_distance(const ExactMagnetizationDistribution& dist, double m0, const OUParams& ou) {
  const std::int64_t n = dist.params.n;
  const double sd = std::sqrt(ou.stationaryVariance);
  double sup = 0.0;
  NeumaierSum cum;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double eta = dist.eta_of(k, m0);
    const double fLeft = cum.value();
    cum.add(dist.probs[static_cast<std::size_t>(k)]);
    const double fRight = cum.value();
    const double target = normal_cdf(eta / sd);
    sup = std::max(sup, std::max(std::abs(fLeft - target), std::abs(fRight - target)));
  }
  return sup;
}

MomentErrorSup moment_error_sup(const LumpedKernel& kernel, const OUParams& ou, double delta) {
  const std::int64_t n = kernel.n();
  const double window = std::pow(static_cast<double>(n), delta);
  const double sig2 = ou.sigma * ou.sigma;
  MomentErrorSup sup;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double eta = kernel.eta_of(k);
    if (std::abs(eta) > window) continue;
    const LocalMoments lm = local_moments(kernel, k);
    sup.drift = std::max(sup.drift,
                         std::abs(lm.drift + 2.0 * ou.ell * eta) / (1.0 + std::abs(eta)));
    sup.secondMoment = std::max(sup.secondMoment, std::abs(lm.secondMoment - sig2));
  }
  return sup;
}

std::vector<TestFunction> default_test_functions() {
  // eta^j exp(-eta^2/2) with closed-form derivatives; rapidly decaying, so the
  // sup over the window is insensitive to the far tail.
  auto damp = [](double e) { return std::exp(-0.5 * e * e); };
  std::vector<TestFunction> fns;
  fns.push_back({"exp(-eta^2/2)",
                 [damp](double e) { return damp(e); },
                 [damp](double e) { return -e * damp(e); },
                 [damp](double e) { return (e * e - 1.0) * damp(e); }});
  fns.push_back({"eta exp(-eta^2/2)",
                 [damp](double e) { return e * damp(e); },
                 [damp](double e) { return (1.0 - e * e) * damp(e); },
                 [damp](double e) { return (e * e * e - 3.0 * e) * damp(e); }});
  fns.push_back({"eta^2 exp(-eta^2/2)",
                 [damp](double e) { return e * e * damp(e); },
                 [damp](double e) { return (2.0 * e - e * e * e) * damp(e); },
                 [damp](double e) { return (e * e * e * e - 5.0 * e * e + 2.0) * damp(e); }});
  fns.push_back({"eta^3 exp(-eta^2/2)",
                 [damp](double e) { return e * e * e * damp(e); },
                 [damp](double e) { return (3.0 * e * e - e * e * e * e) * damp(e); },
                 [damp](double e) {
                   return (e * e * e * e * e - 7.0 * e * e * e + 6.0 * e) * damp(e);
                 }});
  return fns;
}

GeneratorDiscrepancy generator_discrepancy(const LumpedKernel& kernel, const OUParams& ou,
                                           double delta, std::span<const TestFunction> fns) {
  const std::int64_t n = kernel.n();
  const double window = std::pow(static_cast<double>(n), delta);
  const double sig2 = ou.sigma * ou.sigma;
  GeneratorDiscrepancy out;
  for (const auto& fn : fns) {
    double sup = 0.0;
    for (std::int64_t k = 0; k <= n; ++k) {
      const double eta = kernel.eta_of(k);
      if (std::abs(eta) > window) continue;
      const double gn = generator_apply(kernel, fn.f, k);
      const double g = -2.0 * ou.ell * eta * fn.f1(eta) + 0.5 * sig2 * fn.f2(eta);
      sup = std::max(sup, std::abs(gn - g));
    }
    out.perFunction.emplace_back(fn.name, sup);
    out.sup = std::max(out.sup, sup);
  }
  return out;
}

AutocovResult autocov_compare(const PathSample& path, const OUParams& ou,
                              std::span<const double> lags, double dt, int batches) {
  if (path.times.empty()) throw std::invalid_argument("autocov_compare: empty path");
  if (!(dt > 0.0)) throw std::invalid_argument("autocov_compare: dt must be > 0");
  if (batches < 2) throw std::invalid_argument("autocov_compare: need at least 2 batches");

  const double horizon = path.times.back();
  AutocovResult out;
  out.horizonWarning = horizon < 10.0 / ou.ell;

  // Right-continuous step resampling on the uniform grid i*dt.
  const auto gridSize = static_cast<std::size_t>(horizon / dt) + 1;
  std::vector<double> x(gridSize);
  std::size_t j = 0;
  for (std::size_t i = 0; i < gridSize; ++i) {
    const double t = static_cast<double>(i) * dt;
    while (j + 1 < path.times.size() && path.times[j + 1] <= t) ++j;
    x[i] = path.values[j];
  }

  NeumaierSum meanSum;
  for (double v : x) meanSum.add(v);
  const double mean = meanSum.value() / static_cast<double>(x.size());

  for (const double lag : lags) {
    const auto l = static_cast<std::size_t>(std::llround(lag / dt));
    if (std::abs(static_cast<double>(l) * dt - lag) > 1e-9) {
      throw std::invalid_argument("autocov_compare: lag must be a multiple of dt");
    }
    if (l >= x.size()) throw std::invalid_argument("autocov_compare: lag beyond horizon");
    const std::size_t count = x.size() - l;
    NeumaierSum prodSum;
    for (std::size_t i = 0; i < count; ++i) {
      prodSum.add((x[i] - mean) * (x[i + l] - mean));
    }
    const double emp = prodSum.value() / static_cast<double>(count);

    // Batch means over contiguous blocks of the lagged products.
    const std::size_t blockLen = count / static_cast<std::size_t>(batches);
    if (blockLen == 0) {
      throw std::invalid_argument("autocov_compare: too few grid samples for the batch count");
    }
    std::vector<double> blockMeans;
    for (int b = 0; b < batches; ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * blockLen;
      const std::size_t hi = (b == batches - 1) ? count : lo + blockLen;
      NeumaierSum s;
      for (std::size_t i = lo; i < hi; ++i) s.add((x[i] - mean) * (x[i + l] - mean));
      blockMeans.push_back(s.value() / static_cast<double>(hi - lo));
    }
    double bm = 0.0, bv = 0.0;
    for (double v : blockMeans) bm += v;
    bm /= static_cast<double>(blockMeans.size());
    for (double v : blockMeans) bv += (v - bm) * (v - bm);
    bv /= static_cast<double>(blockMeans.size() - 1);
    const double se = std::sqrt(bv / static_cast<double>(blockMeans.size()));

    const double analytic = ou.stationaryVariance * std::exp(-2.0 * ou.ell * lag);
    out.points.push_back({lag, emp, analytic, se});
  }
  return out;
}

ConvergenceReport convergence_report(const ModelParams& base,
                                     std::span<const std::int64_t> nSchedule, double delta,
                                     const AutocovConfig& autocovConfig) {
  ConvergenceReport rep;
  rep.base = base;
  rep.delta = delta;
  const CwRoots roots = solve_cw_roots(base);
  rep.m0 = roots.m0;
  rep.ou = ou_params(base);
  rep.autocovConfig = autocovConfig;

  const auto fns = default_test_functions();
  for (const std::int64_t n : nSchedule) {
    const ModelParams pn(base.beta, base.h, n);
    const auto dist = exact_distribution(pn);
    const auto stats = eta_statistics(dist, rep.m0);
    const auto kernel = build_kernel(pn, rep.m0);
    PerNDiagnostics d;
    d.n = n;
    d.variance = stats.variance;
    d.ks = ks_distance(dist, rep.m0, rep.ou);
    d.momentErrSup = moment_error_sup(kernel, rep.ou, delta);
    d.generatorErr = generator_discrepancy(kernel, rep.ou, delta, fns).sup;
    rep.perN.push_back(d);
  }

  const ModelParams pSim(base.beta, base.h, autocovConfig.n);
  const auto kernel = build_kernel(pSim, rep.m0);
  RngStream rng(autocovConfig.rng);
  const PathSample path = run_ctmc(kernel, autocovConfig.horizon, rng);
  const AutocovResult ac = autocov_compare(path, rep.ou, autocovConfig.lags, autocovConfig.dt,
                                           autocovConfig.batches);
  rep.autocov = ac.points;
  rep.horizonWarning = ac.horizonWarning;
  return rep;
}

std::string to_json_string(const ConvergenceReport& report) {
  nlohmann::json j;
  j["params"] = {{"beta", report.base.beta}, {"h", report.base.h}};
  j["m0"] = report.m0;
  j["ouParams"] = {{"ell", report.ou.ell},
                   {"sigma", report.ou.sigma},
                   {"stationaryVariance", report.ou.stationaryVariance}};
  j["delta"] = report.delta;
  j["perN"] = nlohmann::json::array();
  for (const auto& d : report.perN) {
    j["perN"].push_back({{"n", d.n},
                         {"variance", d.variance},
                         {"ks", d.ks},
                         {"momentErrSup",
                          {{"drift", d.momentErrSup.drift},
                           {"secondMoment", d.momentErrSup.secondMoment}}},
                         {"generatorErr", d.generatorErr}});
  }
  j["autocov"] = nlohmann::json::array();
  for (const auto& p : report.autocov) {
    j["autocov"].push_back({{"lag", p.lag},
                            {"empirical", p.empirical},
                            {"analytic", p.analytic},
                            {"stderr", p.stderror}});
  }
  j["autocovConfig"] = {{"n", report.autocovConfig.n},
                        {"horizon", report.autocovConfig.horizon},
                        {"lags", report.autocovConfig.lags},
                        {"dt", report.autocovConfig.dt},
                        {"batches", report.autocovConfig.batches},
                        {"seed", report.autocovConfig.rng.seed},
                        {"streamId", report.autocovConfig.rng.streamId}};
  j["horizonWarning"] = report.horizonWarning;
  return j.dump(2);
}

}  // namespace cw
