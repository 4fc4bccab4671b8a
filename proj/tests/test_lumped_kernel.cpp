#include "cwscaler/lumped_kernel.hpp"

#include <cmath>
#include <random>

#include "cwscaler/exact_distribution.hpp"
#include "cwscaler/model.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cw;

TEST_CASE("phi basics") {
  const ModelParams params(1.5, 0.2, 16);
  CHECK(phi(0.0, params, 0.9) == 0.0);
  // h = -m0 kills the linear term.
  const ModelParams p2(1.5, -0.9, 16);
  CHECK(phi(1.5, p2, 0.9) == doctest::Approx(-0.5 * 1.5 * 1.5).epsilon(1e-15));
}

TEST_CASE("beta [phi(eta) - phi(eta')] equals the Gibbs log ratio") {
  const ModelParams params(1.5, 0.2, 16);
  const double m0 = solve_cw_roots(params).m0;
  const std::int64_t k = 10, n = 16;
  const double m = static_cast<double>(2 * k - n) / n;
  const double mNext = static_cast<double>(2 * (k + 1) - n) / n;
  const double etaK = std::sqrt(16.0) * (m - m0);
  const double etaNext = std::sqrt(16.0) * (mNext - m0);

  const double viaPhi = params.beta * (phi(etaK, params, m0) - phi(etaNext, params, m0));
  const double direct = n * params.beta *
                        (0.5 * mNext * mNext + params.h * mNext - 0.5 * m * m - params.h * m);
  const double closedForm = 2.0 * params.beta * (m + params.h + 1.0 / n);
  CHECK(viaPhi == doctest::Approx(direct).epsilon(1e-12));
  CHECK(viaPhi == doctest::Approx(closedForm).epsilon(1e-12));
}

TEST_CASE("proposal probabilities") {
  const ModelParams params(1.0, 0.0, 10);
  CHECK(proposal_prob(0, +1, params) == 1.0);
  CHECK(proposal_prob(10, +1, params) == 0.0);
  CHECK(proposal_prob(7, +1, params) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(proposal_prob(7, -1, params) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(proposal_prob(11, +1, params), std::invalid_argument);
  CHECK_THROWS_AS(proposal_prob(-1, -1, params), std::invalid_argument);
}

TEST_CASE("beta = 0 kernel is the lazy level walk") {
  const ModelParams params(0.0, 0.0, 50);
  const LumpedKernel ker = build_kernel(params, 0.0);
  for (std::int64_t k = 0; k <= 50; ++k) {
    CHECK(ker.pUp[k] == static_cast<double>(50 - k) / 50.0);
    CHECK(ker.pDown[k] == static_cast<double>(k) / 50.0);
  }
}

TEST_CASE("detailed balance against the exact law") {
  // n = 4 at (1.5, 0.2) to 1e-14; wider grid to 1e-12.
  auto check_balance = [](double beta, double h, std::int64_t n, double tol) {
    const ModelParams params(beta, h, n);
    const auto dist = exact_distribution(params);
    const auto ker = build_kernel(params, 0.0);
    for (std::int64_t k = 0; k < n; ++k) {
      const double lhs = dist.probs[k] * ker.pUp[k];
      const double rhs = dist.probs[k + 1] * ker.pDown[k + 1];
      const double mx = std::max(lhs, rhs);
      if (mx <= 1e-280) continue;  // below meaningful double resolution
      CHECK(std::abs(lhs - rhs) / mx <= tol);
    }
  };
  check_balance(1.5, 0.2, 4, 1e-14);
  for (auto [beta, h] : {std::pair{1.5, 0.2}, {2.0, 0.1}, {3.0, 0.5}}) {
    for (std::int64_t n : {4, 64, 1024}) check_balance(beta, h, n, 1e-12);
  }
}

TEST_CASE("two-spin kernel equals the brute-force lumped Metropolis chain") {
  const ModelParams params(1.0, 0.0, 2);
  const LumpedKernel ker = build_kernel(params, 0.0);
  std::vector<double> pUp, pDown;
  cw::test::brute_force_lumped_mh(1.0, 0.0, 2, pUp, pDown);
  for (int k = 0; k <= 2; ++k) {
    CHECK(ker.pUp[k] == doctest::Approx(pUp[k]).epsilon(1e-14));
    CHECK(ker.pDown[k] == doctest::Approx(pDown[k]).epsilon(1e-14));
  }
  // From k = 0 the move to the m = 0 level costs energy: acceptance e^-1 on
  // a sure proposal. From k = 1 the downhill-in-energy move is auto-accepted
  // on a half proposal.
  CHECK(ker.pUp[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(ker.pDown[1] == 0.5);
}

TEST_CASE("kernel matches the brute-force lumping for several (n, beta, h)") {
  for (auto [beta, h] : {std::pair{1.5, 0.2}, {0.7, -0.4}, {2.5, 0.0}}) {
    for (int n : {3, 6, 9}) {
      const ModelParams params(beta, h, n);
      const LumpedKernel ker = build_kernel(params, 0.0);
      std::vector<double> pUp, pDown;
      cw::test::brute_force_lumped_mh(beta, h, n, pUp, pDown);
      for (int k = 0; k <= n; ++k) {
        CHECK(ker.pUp[k] == doctest::Approx(pUp[k]).epsilon(1e-12));
        CHECK(ker.pDown[k] == doctest::Approx(pDown[k]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("kernel invariants on a parameter grid") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> betaDist(0.0, 3.0), hDist(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 400);
    const ModelParams params(betaDist(gen), hDist(gen), n);
    const double m0 = 0.1;
    const LumpedKernel ker = build_kernel(params, m0);
    CHECK(ker.pUp[n] == 0.0);
    CHECK(ker.pDown[0] == 0.0);
    for (std::int64_t k = 0; k <= n; ++k) {
      CHECK(ker.pUp[k] >= 0.0);
      CHECK(ker.pUp[k] <= static_cast<double>(n - k) / n * (1.0 + 1e-15));
      CHECK(ker.pDown[k] >= 0.0);
      CHECK(ker.pDown[k] <= static_cast<double>(k) / n * (1.0 + 1e-15));
      CHECK(std::abs(ker.pUp[k] + ker.pDown[k] + ker.pStay[k] - 1.0) <= 1e-15);
      // Moves that climb the state weight are accepted outright.
      const double m = ker.m_of(k);
      if (k < n && 2.0 * params.beta * (m + params.h + 1.0 / n) >= 0.0) {
        CHECK(ker.pUp[k] == static_cast<double>(n - k) / n);
      }
      if (k > 0 && -2.0 * params.beta * (m + params.h - 1.0 / n) >= 0.0) {
        CHECK(ker.pDown[k] == static_cast<double>(k) / n);
      }
    }
  }
}

TEST_CASE("neighboring grid points differ in eta by 2/sqrt(n)") {
  const ModelParams params(1.5, 0.2, 100);
  const double m0 = solve_cw_roots(params).m0;
  const LumpedKernel ker = build_kernel(params, m0);
  for (std::int64_t k = 0; k < 100; ++k) {
    CHECK(ker.eta_of(k + 1) - ker.eta_of(k) == doctest::Approx(0.2).epsilon(1e-12));
  }
}

TEST_CASE("local moments at the symmetric center of the beta = 0 walk") {
  const ModelParams params(0.0, 0.0, 10);
  const LumpedKernel ker = build_kernel(params, 0.0);
  const LocalMoments lm = local_moments(ker, 5);
  CHECK(lm.drift == 0.0);
  CHECK(lm.secondMoment == 4.0);
}

TEST_CASE("pMoment identities") {
  const ModelParams params(1.5, 0.2, 100);
  const LumpedKernel ker = build_kernel(params, solve_cw_roots(params).m0);
  for (std::int64_t k : {0, 13, 50, 77, 100}) {
    const LocalMoments lm = local_moments(ker, k);
    const double scale = std::max(1.0, lm.secondMoment);
    CHECK(std::abs(lm.pMoment(2) - lm.secondMoment) <= 1e-14 * scale);
    CHECK(std::abs(lm.pMoment(3) - lm.secondMoment * (2.0 / 10.0)) <= 1e-14 * scale);
    CHECK(lm.pMoment(3) <= 8.0 / 10.0 + 1e-15);
    CHECK(lm.secondMoment >= 0.0);
    CHECK(lm.secondMoment <= 4.0);
  }
  CHECK_THROWS_AS(local_moments(ker, 0).pMoment(1.5), std::invalid_argument);
}

TEST_CASE("local moments near eta = 0 approach the diffusion coefficients") {
  const ModelParams params(1.5, 0.2, 10'000);
  const double m0 = solve_cw_roots(params).m0;
  const LumpedKernel ker = build_kernel(params, m0);
  std::int64_t kBest = 0;
  for (std::int64_t k = 0; k <= params.n; ++k) {
    if (std::abs(ker.eta_of(k)) < std::abs(ker.eta_of(kBest))) kBest = k;
  }
  const LocalMoments lm = local_moments(ker, kBest);
  CHECK(std::abs(lm.drift) <= 0.02);
  CHECK(lm.secondMoment == doctest::Approx(4.0 * (1.0 - m0)).epsilon(0.02));
  CHECK(lm.secondMoment == doctest::Approx(0.256694).epsilon(1e-4));
}

TEST_CASE("generator kills constants and reduces to the local moments") {
  const ModelParams params(1.5, 0.2, 400);
  const double m0 = solve_cw_roots(params).m0;
  const LumpedKernel ker = build_kernel(params, m0);
  for (std::int64_t k : {0, 57, 200, 399, 400}) {
    CHECK(generator_apply(ker, [](double) { return 3.7; }, k) == 0.0);
    const LocalMoments lm = local_moments(ker, k);
    const double genId = generator_apply(ker, [](double e) { return e; }, k);
    CHECK(std::abs(genId - lm.drift) <= 1e-12 * std::max(1.0, std::abs(lm.drift)));
    const double genSq = generator_apply(ker, [](double e) { return e * e; }, k);
    const double reduced = 2.0 * lm.eta * lm.drift + lm.secondMoment;
    CHECK(std::abs(genSq - reduced) <= 1e-12 * std::max(1.0, std::abs(reduced)));
  }
}
