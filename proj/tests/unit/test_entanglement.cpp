#include "oracles.hpp"

#include "qtd/channel.hpp"
#include "qtd/entanglement.hpp"
#include "qtd/states.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qtd;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(lo + (hi - lo) * k / (n - 1));
  return out;
}

double oracle_negativity(const ComplexMatrix& rho) {
  double n = 0.0;
  for (double v : oracle::hermitian_eigenvalues(oracle::partial_transpose_b(rho))) n += std::max(0.0, -v);
  return n;
}

double negative_eigenvalue_by_hand(double a, double b) {
  return ((1 - a) * (1 - b) - 3 * std::sqrt(a * a * (1 - b) * (1 - b) - a * b * (1 - b) + b * b)) / 9;
}

}  // namespace

TEST_CASE("negativity") {
  CHECK(negativity(DensityMatrix::maximally_mixed()) <= 1e-14);
  CHECK(negativity(DensityMatrix::from_pure(psi00())) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(negativity(rho_alpha_beta({0.999, 0.999})) == doctest::Approx(0.998501).epsilon(1e-6));
  CHECK(negativity(rho_alpha_beta({0.999, 0.999})) == doctest::Approx(0.9985).epsilon(1e-4));

  SUBCASE("eigenvalue and trace-norm routes agree, and match the Jacobi oracle") {
    std::mt19937 rng(13);
    for (int s = 0; s < 50; ++s) {
      // Mix toward Psi00 so that a good share of states are NPT.
      const ComplexMatrix mixed = 0.5 * oracle::random_density(rng) + 0.5 * psi00().projector();
      const DensityMatrix rho(mixed);
      const double n = negativity(rho);
      CHECK(std::abs(n - negativity_from_trace_norm(rho)) <= 1e-11);
      CHECK(std::abs(n - oracle_negativity(mixed)) <= 1e-11);
    }
  }

  SUBCASE("every maximally entangled basis state has negativity 1") {
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n)
        CHECK(std::abs(negativity(DensityMatrix::from_pure(max_entangled_state({m, n}))) - 1.0) <= 1e-11);
  }
}

TEST_CASE("analytic_negative_eigenvalue") {
  CHECK(analytic_negative_eigenvalue({0.5, 0.0}) == doctest::Approx(-1.0 / 9).epsilon(1e-14));
  CHECK(analytic_negative_eigenvalue({0.999, 0.999}) == doctest::Approx(-0.3328336).epsilon(1e-7));
  CHECK(analytic_negative_eigenvalue({0.5, 0.5}) == doctest::Approx(-0.116560).epsilon(1e-5));
  for (double a : {0.0, 0.3, 1.0}) CHECK(analytic_negative_eigenvalue({a, 1.0}) == doctest::Approx(-1.0 / 3));
  for (double a : linspace(0.0, 1.0, 11)) {
    // beta = 0 reduces to the isotropic value (1 - 4 alpha) / 9.
    CHECK(analytic_negative_eigenvalue({a, 0.0}) == doctest::Approx((1 - 4 * a) / 9).epsilon(1e-12));
    for (double b : linspace(0.0, 1.0, 11)) CHECK(analytic_negative_eigenvalue({a, b}) == doctest::Approx(negative_eigenvalue_by_hand(a, b)));
  }

  SUBCASE("three lowest PT eigenvalues at tau = 0 equal the closed form") {
    for (double a : linspace(0.0, 1.0, 21)) {
      for (double b : linspace(0.0, 1.0, 21)) {
        if (!(b > 0.25 || a > 0.278)) continue;
        const auto values = oracle::hermitian_eigenvalues(partial_transpose_b(rho_alpha_beta({a, b})));
        const double expected = analytic_negative_eigenvalue({a, b});
        for (int k = 0; k < 3; ++k) CHECK(std::abs(values[k] - expected) <= 1e-10);
      }
    }
  }
}

TEST_CASE("pt_report") {
  CHECK(pt_report(isotropic(0.3)).is_npt);
  CHECK_FALSE(pt_report(isotropic(0.2)).is_npt);
  CHECK_FALSE(pt_report(isotropic(0.25)).is_npt);

  std::mt19937 rng(2);
  for (int s = 0; s < 30; ++s) {
    const DensityMatrix rho(0.6 * oracle::random_density(rng) + 0.4 * dfs_state().projector());
    const PtSpectrumReport r = pt_report(rho);
    double sum = 0.0;
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
      if (k > 0) CHECK(r.eigenvalues[k - 1] <= r.eigenvalues[k]);
      sum += std::max(0.0, -r.eigenvalues[k]);
    }
    CHECK(std::abs(r.negativity - sum) <= 1e-12);
    CHECK(r.min_eigenvalue == r.eigenvalues[0]);
    CHECK(r.is_npt == (r.min_eigenvalue < -kNptTolerance));
  }

  SUBCASE("alpha > 0.277 and beta > 1/4 stay NPT at all times") {
    for (double a : linspace(0.28, 1.0, 8))
      for (double b : linspace(0.26, 1.0, 8))
        for (double t : {0.0, 0.5, 2.0, 10.0, 40.0}) CHECK(pt_report(evolved_rho_alpha_beta({a, b}, Tau(t))).is_npt);
  }
}

TEST_CASE("invariant_eigenvalue_check") {
  const std::vector<double> integer_taus = linspace(0.0, 10.0, 11);

  const auto high = invariant_eigenvalue_check({0.999, 0.999}, integer_taus);
  CHECK(high.found);
  CHECK(high.witness == doctest::Approx(-0.3328336).epsilon(1e-7));
  CHECK(high.max_deviation <= 1e-10);

  const std::vector<double> few = {0.0, 2.0, 5.0};
  const auto mid = invariant_eigenvalue_check({0.5, 0.5}, few);
  CHECK(mid.found);
  CHECK(mid.witness == doctest::Approx(-0.116560).epsilon(1e-5));

  const auto pure = invariant_eigenvalue_check({0.3, 1.0}, integer_taus);
  CHECK(pure.found);
  CHECK(pure.witness == doctest::Approx(-1.0 / 3));

  const std::vector<double> one = {1.0};
  CHECK_THROWS_AS(invariant_eigenvalue_check({0.5, 0.5}, one), std::invalid_argument);

  SUBCASE("exactly one PT eigenvalue tracks the closed form once tau > 0") {
    for (double a : linspace(0.3, 0.999, 6)) {
      for (double b : linspace(0.3, 0.99, 6)) {
        const double target = analytic_negative_eigenvalue({a, b});
        const auto values =
            oracle::hermitian_eigenvalues(partial_transpose_b(evolved_rho_alpha_beta({a, b}, Tau(1.0))));
        int matches = 0;
        for (double v : values) matches += std::abs(v - target) <= 1e-10 ? 1 : 0;
        CHECK(matches == 1);
      }
    }
  }
}

TEST_CASE("ccnr_entangled") {
  const CcnrResult maximal = ccnr_entangled(DensityMatrix::from_pure(psi00()));
  CHECK(maximal.entangled);
  CHECK(maximal.value == doctest::Approx(3.0).epsilon(1e-12));

  const CcnrResult product = ccnr_entangled(DensityMatrix::from_pure(product_basis_state(0, 0)));
  CHECK_FALSE(product.entangled);
  CHECK(product.value == doctest::Approx(1.0).epsilon(1e-12));

  const CcnrResult mixed = ccnr_entangled(DensityMatrix::maximally_mixed());
  CHECK_FALSE(mixed.entangled);
  CHECK(mixed.value == doctest::Approx(1.0 / 3).epsilon(1e-12));

  // Isotropic: realigned norm is (1 + 8 alpha) / 3, above 1 exactly when alpha > 1/4.
  for (double a : {0.1, 0.3, 0.7}) {
    const CcnrResult r = ccnr_entangled(isotropic(a));
    CHECK(r.value == doctest::Approx((1 + 8 * a) / 3).epsilon(1e-12));
    CHECK(r.entangled == (a > 0.25));
  }
}

TEST_CASE("negativity along the channel") {
  const std::vector<double> taus = linspace(0.0, 10.0, 41);

  SUBCASE("non-increasing in tau") {
    for (double a : linspace(0.0, 1.0, 6)) {
      for (double b : linspace(0.0, 1.0, 6)) {
        double previous = negativity(evolved_rho_alpha_beta({a, b}, Tau(0.0)));
        for (double t : taus) {
          const double n = negativity(evolved_rho_alpha_beta({a, b}, Tau(t)));
          CHECK(n <= previous + 1e-10);
          previous = n;
        }
      }
    }
  }

  SUBCASE("generic mixed states can gain negativity") {
    std::mt19937 rng(4);
    int increasing = 0;
    double largest_gain = 0.0;
    for (int s = 0; s < 10; ++s) {
      const DensityMatrix rho(0.5 * oracle::random_density(rng) + 0.5 * psi00().projector());
      double previous = negativity(rho);
      bool rose = false;
      for (double t : taus) {
        const double n = negativity(apply_channel(rho, Tau(t)));
        largest_gain = std::max(largest_gain, n - previous);
        rose = rose || n > previous + 1e-10;
        previous = n;
      }
      increasing += rose ? 1 : 0;
    }
    CHECK(increasing > 0);
    CHECK(largest_gain > 1e-6);
  }

  SUBCASE("freezes for beta > 1/4") {
    for (double a : linspace(0.0, 1.0, 6)) {
      for (double b : linspace(0.3, 1.0, 6)) {
        const double late = negativity(evolved_rho_alpha_beta({a, b}, Tau(10.0)));
        const double earlier = negativity(evolved_rho_alpha_beta({a, b}, Tau(8.0)));
        CHECK(std::abs(late - earlier) <= 1e-6);
      }
    }
  }

  SUBCASE("proper mixtures are not time-invariant") {
    for (double a : linspace(0.3, 0.999, 8)) {
      for (double b : linspace(0.3, 0.999, 8)) {
        const double start = negativity(evolved_rho_alpha_beta({a, b}, Tau(0.0)));
        const double end = negativity(evolved_rho_alpha_beta({a, b}, Tau(10.0)));
        CHECK(start - end > 1e-9);
      }
    }
  }
}

TEST_CASE("npt_alpha_boundary") {
  const double boundary = npt_alpha_boundary();
  CHECK(boundary == doctest::Approx(0.2779).epsilon(1e-3));
  // Just above: NPT for every beta. Just below: some beta is PPT.
  bool all_npt_above = true;
  bool some_ppt_below = false;
  for (double b : linspace(0.0, 1.0, 2001)) {
    all_npt_above = all_npt_above && analytic_negative_eigenvalue({boundary + 1e-6, b}) < 0.0;
    some_ppt_below = some_ppt_below || analytic_negative_eigenvalue({boundary - 1e-4, b}) >= 0.0;
  }
  CHECK(all_npt_above);
  CHECK(some_ppt_below);
}
