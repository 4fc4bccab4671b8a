#include "cwscaler/concentration.hpp"

#include <cmath>

#include "cwscaler/model.hpp"
#include "doctest.h"

using namespace cw;

TEST_CASE("chatterjee bound values and shape") {
  CHECK(chatterjee_bound(0.0, 1.7) == 2.0);
  CHECK(chatterjee_bound(2.0, 1.0) == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-14));
  double prev = chatterjee_bound(0.0, 1.0);
  for (double t = 0.25; t <= 6.0; t += 0.25) {
    const double b = chatterjee_bound(t, 1.0);
    CHECK(b < prev);
    prev = b;
  }
  for (double t : {0.5, 2.0, 4.0}) {
    CHECK(chatterjee_bound(t, 2.0) > chatterjee_bound(t, 1.0));  // increasing in beta
  }
  CHECK_THROWS_AS(chatterjee_bound(-0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(chatterjee_bound(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("exact tail edge cases") {
  // Threshold beyond the maximal possible deviation: the sum is empty.
  CHECK(exact_lhs_tail(ModelParams(1.5, 0.2, 100), 10.0 * 10.0) == 0.0);
  // n=2, beta=1, h=0, t=0: threshold 1/2, all level deviations are
  // |+-1 - tanh(+-1)| = 0.238 or 0, so nothing qualifies.
  CHECK(exact_lhs_tail(ModelParams(1.0, 0.0, 2), 0.0) == 0.0);
}

TEST_CASE("exact tail is dominated by the bound on a small grid") {
  for (auto [beta, h] : {std::pair{1.5, 0.2}, {3.0, 0.5}}) {
    const auto dist = exact_distribution(ModelParams(beta, h, 1000));
    for (double t = 0.0; t <= 5.0; t += 0.5) {
      CHECK(exact_lhs_tail(dist, t) <= chatterjee_bound(t, beta));
    }
  }
}

TEST_CASE("tail is symmetric in the field sign") {
  for (std::int64_t n : {37, 200}) {
    const auto plus = exact_distribution(ModelParams(1.5, 0.2, n));
    const auto minus = exact_distribution(ModelParams(1.5, -0.2, n));
    for (double t : {0.0, 0.5, 1.5, 3.0}) {
      const double a = exact_lhs_tail(plus, t);
      const double b = exact_lhs_tail(minus, t);
      CHECK(a == doctest::Approx(b).epsilon(1e-13));
    }
  }
}

TEST_CASE("slope lemma quantities at (1.5, 0.2)") {
  const SlopeReport rep = check_slope(1.5, 0.2);
  CHECK(rep.m0 == doctest::Approx(0.935886027986591).epsilon(1e-12));
  CHECK(rep.betaLimit == doctest::Approx(1.5 * (1.0 - rep.m0 * rep.m0)).epsilon(1e-14));
  CHECK(rep.betaLimit == doctest::Approx(0.186176).epsilon(1e-4));
  CHECK(rep.ok);
  CHECK(rep.m1 == doctest::Approx(0.577350269189626).epsilon(1e-14));
  CHECK(rep.fL == doctest::Approx(1.166025403784439).epsilon(1e-14));
  CHECK(rep.fR == doctest::Approx(0.658478948462408).epsilon(1e-14));
  CHECK(rep.m1BelowM0);
  CHECK(rep.fLAboveFR);
}

TEST_CASE("slope comparison functions at beta = 1") {
  // fL(1) = h > 0 = fR(1).
  const double h = 0.3;
  auto fL = [&](double beta) { return std::sqrt((beta - 1.0) * beta) + h * beta; };
  auto fR = [](double beta) { return std::log(std::sqrt(beta) + std::sqrt(beta - 1.0)); };
  CHECK(fL(1.0) == h);
  CHECK(fR(1.0) == 0.0);
}

TEST_CASE("slope lemma near the critical point") {
  const SlopeReport rep = check_slope(1.0 + 1e-8, 0.3);
  CHECK(rep.m1 < 1e-3);
  CHECK(rep.m1BelowM0);
  CHECK(rep.ok);
}

TEST_CASE("check_slope domain") {
  CHECK_THROWS_AS(check_slope(0.9, 0.1), std::domain_error);
  CHECK_THROWS_AS(check_slope(1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(check_slope(1.5, -0.2), std::domain_error);
}

TEST_CASE("find_interval fixture at (1.5, 0.2)") {
  const ModelParams params(1.5, 0.2);
  const ConcentrationInterval iv = find_interval(params);
  // Regression fixture, not ground truth: values pinned by the construction.
  CHECK(iv.M1 == doctest::Approx(0.889228282876846).epsilon(1e-9));
  CHECK(iv.M2 == 1.0);
  CHECK(iv.iota0 == doctest::Approx(0.785766602).epsilon(1e-6));
  CHECK(iv.margin >= 1e-3);
  CHECK(iv.margin == doctest::Approx(1.00117e-3).epsilon(1e-2));

  const double m0 = solve_cw_roots(params).m0;
  CHECK(iv.M1 < m0);
  CHECK(m0 < iv.M2);

  // K(m0, iota) = atanh(m0) - beta (m0 + h) is the root residual.
  CHECK(std::abs(std::atanh(m0) - 1.5 * (m0 + 0.2)) <= 1e-10);

  // Sign split of K and the grid inequality, including at iota0 / 2.
  auto K = [&](double m, double iota) {
    const double mp = m - iota * (m - m0);
    return std::atanh(mp) - 1.5 * (m + 0.2);
  };
  for (int i = 0; i <= 2000; ++i) {
    const double m = iv.M1 + (iv.M2 - iv.M1) * i / 2000.0;
    if (m <= m0) CHECK(K(m, iv.iota0) <= 1e-12);
    if (m >= m0) CHECK(K(m, iv.iota0) >= -1e-12);
    const double lhs = std::abs(m - std::tanh(1.5 * (m + 0.2)));
    CHECK(lhs >= iv.iota0 * std::abs(m - m0) - 1e-12);
    CHECK(lhs >= 0.5 * iv.iota0 * std::abs(m - m0) - 1e-12);
  }
}

TEST_CASE("find_interval domain errors") {
  CHECK_THROWS_AS(find_interval(ModelParams(0.8, 0.2)), std::domain_error);
  CHECK_THROWS_AS(find_interval(ModelParams(1.5, -0.2)), std::domain_error);
  CHECK_THROWS_AS(find_interval(ModelParams(2.0, 0.0)), std::domain_error);
}

TEST_CASE("tail threshold formula") {
  CHECK(tail_threshold_t(0.1, 1.5, 10'000, 0.3) ==
        doctest::Approx(1.5698931924611136).epsilon(1e-12));
}

TEST_CASE("tail decay report on a short schedule") {
  const ModelParams params(1.5, 0.2);
  const std::vector<double> alphas{1.0, 2.0, 3.0};
  const std::vector<std::int64_t> schedule{100, 1000};
  const TailReport rep = tail_decay(params, 0.3, alphas, schedule);

  REQUIRE(rep.logTails.size() == 2);
  CHECK(rep.logTails[0] == doctest::Approx(-18.9909).epsilon(1e-4));
  CHECK(rep.logTails[1] == doctest::Approx(-90.0679).epsilon(1e-4));
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      CHECK(rep.logValues[a][i] ==
            doctest::Approx(alphas[a] * std::log(static_cast<double>(schedule[i])) +
                            rep.logTails[i])
                .epsilon(1e-12));
      CHECK(rep.values[a][i] >= 0.0);
    }
    CHECK(rep.logValues[a][1] < rep.logValues[a][0]);
  }
  CHECK(rep.tN[1] > rep.tN[0]);
  REQUIRE(rep.chatterjeeBounds.size() == 2);
  CHECK(rep.chatterjeeBounds[0] <= 2.0);
}

TEST_CASE("tail decay with delta close to 1/2 reports a tiny but logged tail") {
  const ModelParams params(1.5, 0.2);
  const std::vector<double> alphas{1.0};
  const std::vector<std::int64_t> schedule{100};
  const TailReport rep = tail_decay(params, 0.49, alphas, schedule);
  CHECK(rep.values[0][0] < 1e-12);
  CHECK(rep.logTails[0] == doctest::Approx(-40.9837).epsilon(1e-3));
}

TEST_CASE("tail decay is symmetric in the field sign") {
  const std::vector<double> alphas{2.0};
  const std::vector<std::int64_t> schedule{100, 400};
  const TailReport plus = tail_decay(ModelParams(1.5, 0.2), 0.3, alphas, schedule);
  const TailReport minus = tail_decay(ModelParams(1.5, -0.2), 0.3, alphas, schedule);
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    CHECK(plus.logTails[i] == doctest::Approx(minus.logTails[i]).epsilon(1e-9));
  }
}

TEST_CASE("tail decay argument validation") {
  const std::vector<double> alphas{1.0};
  const std::vector<std::int64_t> good{10, 20};
  const std::vector<std::int64_t> bad{20, 10};
  CHECK_THROWS_AS(tail_decay(ModelParams(1.5, 0.2), 0.6, alphas, good), std::invalid_argument);
  CHECK_THROWS_AS(tail_decay(ModelParams(1.5, 0.2), 0.3, alphas, bad), std::invalid_argument);
}
