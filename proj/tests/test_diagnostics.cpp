#include "cwscaler/diagnostics.hpp"

#include <cmath>
#include <random>

#include "cwscaler/model.hpp"
#include "cwscaler/simulate.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cw;

TEST_CASE("ou formula passthrough at hypothetical m0 = 0") {
  const OUParams ou = ou_params_from_m0(1.5, 0.0);
  CHECK(ou.sigma == 2.0);
  CHECK(ou.ell == doctest::Approx(1.0 - 1.5).epsilon(1e-15));  // negative: not mean reverting
}

TEST_CASE("ou parameters at (1.5, 0.2)") {
  const OUParams ou = ou_params(ModelParams(1.5, 0.2));
  CHECK(ou.m0 == doctest::Approx(0.935886027986591).epsilon(1e-12));
  CHECK(ou.ell == doctest::Approx(0.420388377365992).epsilon(1e-12));
  CHECK(ou.sigma == doctest::Approx(0.506414739174953).epsilon(1e-12));
  CHECK(ou.stationaryVariance == doctest::Approx(0.152511285909294).epsilon(1e-12));
}

TEST_CASE("ou parameters require the subcritical phase") {
  CHECK_THROWS_AS(ou_params(ModelParams(0.8, 0.1)), std::domain_error);
  CHECK_THROWS_AS(ou_params(ModelParams(2.0, 0.0)), std::domain_error);
}

TEST_CASE("ell positivity and the variance identity on random subcritical draws") {
  std::mt19937_64 gen(314159);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double beta = 1.0 + 4.0 * u(gen) + 1e-9;
    double h = u(gen);
    if (h == 0.0) h = 0.5;
    if (trial % 2 == 1) h = -h;  // exercise the |m0| branch
    const OUParams ou = ou_params(ModelParams(beta, h));
    CHECK(ou.ell > 0.0);
    const double a = std::abs(ou.m0);
    const double identity = (1.0 - a * a) / (1.0 - beta * (1.0 - a * a));
    CHECK(std::abs(ou.stationaryVariance - identity) <= 1e-10);
  }
}

TEST_CASE("asymptotic moment oracle") {
  const ModelParams params(1.5, 0.2);
  const OUParams ou = ou_params(params);
  CHECK(asymptotic_moment_oracle(ou, 0.0).driftLimit == 0.0);
  const MomentLimits lims = asymptotic_moment_oracle(params, 1.0);
  CHECK(lims.driftLimit == doctest::Approx(-0.840776754731983).epsilon(1e-12));
  CHECK(lims.secondMomentLimit == doctest::Approx(0.256455888053635).epsilon(1e-12));
  for (double eta : {0.3, 1.7, 4.0}) {
    CHECK(asymptotic_moment_oracle(ou, eta).driftLimit ==
          -asymptotic_moment_oracle(ou, -eta).driftLimit);
  }
}

TEST_CASE("ks distance: discreteness floor and decreasing trend") {
  const ModelParams base(1.5, 0.2);
  const double m0 = solve_cw_roots(base).m0;
  const OUParams ou = ou_params(base);

  double prev = 1.0;
  const double expected[3] = {0.12148, 0.03888, 0.01234};
  int i = 0;
  for (std::int64_t n : {100, 1000, 10'000}) {
    const auto dist = exact_distribution(ModelParams(1.5, 0.2, n));
    const double ks = ks_distance(dist, m0, ou);
    double maxAtom = 0.0;
    for (double p : dist.probs) maxAtom = std::max(maxAtom, p);
    CHECK(ks >= 0.5 * maxAtom - 1e-12);
    CHECK(ks < prev);
    CHECK(ks == doctest::Approx(expected[i]).epsilon(2e-3));
    prev = ks;
    ++i;
  }
}

TEST_CASE("moment error sup matches the precomputed expansion values") {
  const ModelParams base(1.5, 0.2);
  const double m0 = solve_cw_roots(base).m0;
  const OUParams ou = ou_params(base);
  const double expectedDrift[2] = {0.09116, 0.05194};
  const double expectedSecond[2] = {1.00825, 0.60859};
  int i = 0;
  for (std::int64_t n : {100, 1000}) {
    const auto ker = build_kernel(ModelParams(1.5, 0.2, n), m0);
    const MomentErrorSup sup = moment_error_sup(ker, ou, 0.3);
    CHECK(sup.drift == doctest::Approx(expectedDrift[i]).epsilon(1e-3));
    CHECK(sup.secondMoment == doctest::Approx(expectedSecond[i]).epsilon(1e-3));
    ++i;
  }
}

TEST_CASE("generator discrepancy: trivial function, reductions, trend") {
  const ModelParams base(1.5, 0.2);
  const double m0 = solve_cw_roots(base).m0;
  const OUParams ou = ou_params(base);

  // phi == 1 gives zero from both generators.
  const std::vector<TestFunction> constant{{"one", [](double) { return 1.0; },
                                            [](double) { return 0.0; },
                                            [](double) { return 0.0; }}};
  const auto kerSmall = build_kernel(ModelParams(1.5, 0.2, 64), m0);
  CHECK(generator_discrepancy(kerSmall, ou, 0.3, constant).sup == 0.0);

  // phi(eta) = eta reduces the discrepancy to the drift error exactly.
  const std::vector<TestFunction> identity{{"id", [](double e) { return e; },
                                            [](double) { return 1.0; },
                                            [](double) { return 0.0; }}};
  for (std::int64_t k : {0, 10, 32, 64}) {
    const LocalMoments lm = local_moments(kerSmall, k);
    const double viaGen = generator_apply(kerSmall, identity[0].f, k);
    CHECK(std::abs(viaGen - lm.drift) <= 1e-12 * std::max(1.0, std::abs(lm.drift)));
  }

  const double expected[2] = {0.50220, 0.15304};
  const auto fns = default_test_functions();
  REQUIRE(fns.size() == 4);
  int i = 0;
  double prev = 1e9;
  for (std::int64_t n : {100, 1000}) {
    const auto ker = build_kernel(ModelParams(1.5, 0.2, n), m0);
    const GeneratorDiscrepancy d = generator_discrepancy(ker, ou, 0.3, fns);
    CHECK(d.sup == doctest::Approx(expected[i]).epsilon(1e-3));
    CHECK(d.sup < prev);
    CHECK(d.perFunction.size() == 4);
    prev = d.sup;
    ++i;
  }
}

TEST_CASE("test function derivatives are consistent") {
  const auto fns = default_test_functions();
  for (const auto& fn : fns) {
    for (double e : {-2.3, -0.7, 0.0, 0.4, 1.9, 3.5}) {
      const double step = 1e-5;
      const double d1 = (fn.f(e + step) - fn.f(e - step)) / (2.0 * step);
      const double d2 = (fn.f(e + step) - 2.0 * fn.f(e) + fn.f(e - step)) / (step * step);
      CHECK(fn.f1(e) == doctest::Approx(d1).epsilon(1e-6));
      CHECK(fn.f2(e) == doctest::Approx(d2).epsilon(1e-4));
    }
  }
}

TEST_CASE("autocov horizon warning") {
  const OUParams ou = ou_params(ModelParams(1.5, 0.2));
  RngStream rng({50, 0});
  const PathSample path = run_ou(ou, 5.0, 0.05, rng);  // 5 < 10/ell ~ 23.8
  const std::vector<double> lags{0.5};
  const AutocovResult res = autocov_compare(path, ou, lags, 0.05, 5);
  CHECK(res.horizonWarning);
  REQUIRE(res.points.size() == 1);
  CHECK(res.points[0].analytic ==
        doctest::Approx(ou.stationaryVariance * std::exp(-2.0 * ou.ell * 0.5)).epsilon(1e-14));
}

TEST_CASE("autocov rejects lags off the resampling grid") {
  const OUParams ou = ou_params(ModelParams(1.5, 0.2));
  RngStream rng({51, 0});
  const PathSample path = run_ou(ou, 100.0, 0.05, rng);
  const std::vector<double> bad{0.517};
  CHECK_THROWS_AS(autocov_compare(path, ou, bad, 0.05, 10), std::invalid_argument);
}

TEST_CASE("convergence report: determinism, fixtures and JSON schema") {
  const ModelParams base(1.5, 0.2);
  AutocovConfig cfg;
  cfg.n = 2000;
  cfg.horizon = 60.0;
  cfg.lags = {0.2, 0.5};
  cfg.dt = 0.1;
  cfg.batches = 10;
  cfg.rng = {7777, 0};
  const std::vector<std::int64_t> schedule{100, 1000};

  const ConvergenceReport rep = convergence_report(base, schedule, 0.3, cfg);
  REQUIRE(rep.perN.size() == 2);
  CHECK(rep.perN[0].variance == doctest::Approx(0.161402).epsilon(1e-3));
  CHECK(rep.perN[1].variance == doctest::Approx(0.153355).epsilon(1e-3));
  CHECK(rep.perN[0].ks == doctest::Approx(0.12148).epsilon(2e-3));
  CHECK(rep.perN[1].ks == doctest::Approx(0.03888).epsilon(2e-3));
  CHECK(rep.perN[1].momentErrSup.drift < rep.perN[0].momentErrSup.drift);
  CHECK(rep.perN[1].generatorErr < rep.perN[0].generatorErr);
  for (const auto& p : rep.autocov) {
    CHECK(std::abs(p.empirical - p.analytic) <= 5.0 * p.stderror);
  }

  const std::string json = to_json_string(rep);
  const ConvergenceReport rep2 = convergence_report(base, schedule, 0.3, cfg);
  CHECK(json == to_json_string(rep2));  // byte-identical rerun

  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["params"]["beta"].get<double>() == 1.5);
  CHECK(parsed["params"]["h"].get<double>() == 0.2);
  CHECK(parsed["m0"].get<double>() == rep.m0);
  CHECK(parsed["ouParams"]["ell"].get<double>() == rep.ou.ell);
  CHECK(parsed["perN"].size() == 2);
  CHECK(parsed["perN"][0]["n"].get<std::int64_t>() == 100);
  CHECK(parsed["perN"][0]["momentErrSup"]["drift"].get<double>() ==
        rep.perN[0].momentErrSup.drift);
  CHECK(parsed["autocov"].size() == 2);
  CHECK(parsed["autocov"][0]["lag"].get<double>() == 0.2);
  CHECK(parsed["autocovConfig"]["seed"].get<std::uint64_t>() == 7777);
}
