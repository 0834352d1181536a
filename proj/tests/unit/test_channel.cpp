#include "oracles.hpp"

#include "qtd/channel.hpp"
#include "qtd/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qtd;

namespace {

std::vector<double> tau_test_grid() {
  std::vector<double> taus;
  for (int k = 0; k <= 100; ++k) taus.push_back(0.1 * k);
  return taus;
}

std::vector<DensityMatrix> random_states(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<DensityMatrix> out;
  for (int i = 0; i < n; ++i) out.emplace_back(oracle::random_density(rng));
  return out;
}

}  // namespace

TEST_CASE("gamma") {
  CHECK(gamma(Tau(0.0)) == 1.0);
  CHECK(gamma(Tau(2.0 * std::numbers::ln2)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gamma(Tau(200.0)) < 1e-40);
  double previous = 1.0;
  for (double t : tau_test_grid()) {
    CHECK(gamma(Tau(t)) <= previous);
    previous = gamma(Tau(t));
  }
  CHECK_THROWS_AS(Tau(-1e-9), std::invalid_argument);
  CHECK_THROWS_AS(Tau(std::nan("")), std::invalid_argument);
}

TEST_CASE("kraus_set") {
  const KrausSet at_zero = kraus_set(Tau(0.0));
  CHECK(at_zero.op(0) == ComplexMatrix::Identity(9, 9));
  CHECK(at_zero.op(1) == ComplexMatrix::Zero(9, 9));
  CHECK(at_zero.op(2) == ComplexMatrix::Zero(9, 9));

  for (double t : tau_test_grid()) CHECK(kraus_set(Tau(t)).completeness_deviation() <= 1e-14);

  // gamma = 1/2
  const KrausSet half = kraus_set(Tau(2.0 * std::numbers::ln2));
  CHECK(half.diagonals[1](0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
  CHECK(half.diagonals[1](4) == doctest::Approx(-std::sqrt(3.0) / 8).epsilon(1e-14));
  CHECK(half.diagonals[2](8) == doctest::Approx(0.75 * std::sqrt(1.25)).epsilon(1e-14));
  CHECK(half.diagonals[2](8) == doctest::Approx(0.838525).epsilon(1e-6));
  CHECK_THROWS_AS(half.op(3), std::out_of_range);
}

TEST_CASE("dephasing_mask") {
  const DephasingMask zero = dephasing_mask(Tau(0.0));
  CHECK(zero == DephasingMask::Ones());

  const DephasingMask half = dephasing_mask(Tau(2.0 * std::numbers::ln2));
  CHECK(half(0, 4) == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(half(8, 0) == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(half(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half(4, 8) == 1.0);
  CHECK(half(8, 4) == 1.0);

  const std::vector<int> dfs = {1, 2, 3, 5, 6, 7};
  for (double t : tau_test_grid()) {
    const DephasingMask m = dephasing_mask(Tau(t));
    CHECK(m == m.transpose());
    CHECK(m.minCoeff() >= 0.0);
    CHECK(m.maxCoeff() <= 1.0);
    for (int i = 0; i < 9; ++i) CHECK(m(i, i) == 1.0);
    for (int i : dfs)
      for (int j : dfs) CHECK(m(i, j) == 1.0);
  }

  SUBCASE("mask equals the Kraus sum evaluated entrywise") {
    for (double t : tau_test_grid()) {
      const KrausSet set = kraus_set(Tau(t));
      const DephasingMask m = dephasing_mask(Tau(t));
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
          double factor = 0.0;
          for (int k = 0; k < 3; ++k) factor += set.diagonals[k](i) * set.diagonals[k](j);
          CHECK(std::abs(factor - m(i, j)) <= 1e-14);
        }
    }
  }
}

TEST_CASE("apply_channel") {
  const auto states = random_states(100, 41);
  const auto taus = tau_test_grid();

  SUBCASE("identity at tau = 0") {
    for (const auto& rho : states) CHECK(apply_channel(rho, Tau(0.0)).matrix() == rho.matrix());
  }

  SUBCASE("Kraus and analytic agree; trace, Hermiticity, positivity preserved") {
    double worst = 0.0;
    for (const auto& rho : states) {
      for (double t : taus) {
        const DensityMatrix a = apply_channel(rho, Tau(t), ChannelMode::analytic);
        const DensityMatrix k = apply_channel(rho, Tau(t), ChannelMode::kraus);
        worst = std::max(worst, oracle::max_abs(a.matrix() - k.matrix()));
        CHECK(std::abs(a.matrix().trace().real() - 1.0) <= 1e-12);
      }
    }
    CHECK(worst <= 1e-12);
    // DensityMatrix construction enforces Hermiticity and PSD; spot-check with the oracle.
    for (const auto& rho : states) {
      const auto values = oracle::hermitian_eigenvalues(apply_channel(rho, Tau(3.0)).matrix());
      CHECK(values.front() >= -1e-10);
    }
  }

  SUBCASE("semigroup") {
    for (std::size_t s = 0; s < 20; ++s) {
      for (double t1 : {0.0, 0.3, 1.7, 4.0}) {
        for (double t2 : {0.0, 0.5, 2.2}) {
          const DensityMatrix twice = apply_channel(apply_channel(states[s], Tau(t1)), Tau(t2));
          const DensityMatrix once = apply_channel(states[s], Tau(t1 + t2));
          CHECK(oracle::max_abs(twice.matrix() - once.matrix()) <= 1e-12);
        }
      }
    }
  }

  SUBCASE("zero entries stay exactly zero") {
    ComplexMatrix sparse = ComplexMatrix::Zero(9, 9);
    sparse(0, 0) = 0.4;
    sparse(4, 4) = 0.3;
    sparse(6, 6) = 0.3;
    sparse(0, 4) = sparse(4, 0) = 0.2;
    sparse(4, 6) = Complex(0.1, 0.05);
    sparse(6, 4) = std::conj(sparse(4, 6));
    const DensityMatrix rho(sparse);
    for (double t : taus) {
      const DensityMatrix out = apply_channel(rho, Tau(t));
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
          if (sparse(i, j) == Complex(0.0)) CHECK(out(i, j) == Complex(0.0));
    }
  }

  SUBCASE("DFS Weyl states are invariant") {
    int invariant = 0;
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        const DensityMatrix p = DensityMatrix::from_pure(max_entangled_state({m, n}));
        double worst = 0.0;
        for (double t : taus) worst = std::max(worst, oracle::max_abs(apply_channel(p, Tau(t)).matrix() - p.matrix()));
        if (m != 0) CHECK(worst <= 1e-14);
        if (worst <= 1e-14) ++invariant;
      }
    }
    CHECK(invariant == 6);
    const DensityMatrix dfs = DensityMatrix::from_pure(dfs_state());
    CHECK(apply_channel(dfs, Tau(7.5)).matrix() == dfs.matrix());
  }

  SUBCASE("Psi00 at gamma = 1/2") {
    const DensityMatrix out =
        apply_channel(DensityMatrix::from_pure(psi00()), Tau(2.0 * std::numbers::ln2));
    CHECK(out(0, 4).real() == doctest::Approx(1.0 / 48).epsilon(1e-13));
    CHECK(out(0, 8).real() == doctest::Approx(1.0 / 48).epsilon(1e-13));
    CHECK(out(4, 8).real() == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(out(0, 0).real() == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(out(4, 4).real() == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(out(8, 8).real() == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(out(1, 1) == Complex(0.0));
  }
}

TEST_CASE("trajectory_oracle") {
  const DensityMatrix psi = DensityMatrix::from_pure(psi00());

  SUBCASE("converges to the analytic channel on Psi00") {
    const DensityMatrix mc = trajectory_oracle(psi, Tau(1.0), 100000, 2024);
    CHECK(oracle::max_abs(mc.matrix() - apply_channel(psi, Tau(1.0)).matrix()) <= 3e-2);
  }

  SUBCASE("converges on a generic mixed state, including DFS-block coherences") {
    const auto states = random_states(3, 77);
    for (const auto& rho : states) {
      const DensityMatrix mc = trajectory_oracle(rho, Tau(0.8), 50000, 9);
      CHECK(oracle::max_abs(mc.matrix() - apply_channel(rho, Tau(0.8)).matrix()) <= 3e-2);
    }
  }

  SUBCASE("error shrinks roughly as 1/sqrt(n)") {
    const DensityMatrix exact = apply_channel(psi, Tau(1.0));
    auto err = [&](std::uint64_t n) {
      double total = 0.0;
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        total += oracle::max_abs(trajectory_oracle(psi, Tau(1.0), n, seed).matrix() - exact.matrix());
      }
      return total / 8;
    };
    const double coarse = err(1000);
    const double fine = err(64000);
    // 64x more samples: expect ~8x smaller error; allow generous slack.
    CHECK(fine < coarse / 3.0);
  }

  SUBCASE("diagonal input comes back bit-exact") {
    ComplexMatrix diag = ComplexMatrix::Zero(9, 9);
    for (int i = 0; i < 9; ++i) diag(i, i) = (i + 1) / 45.0;
    const DensityMatrix rho(diag);
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      CHECK(trajectory_oracle(rho, Tau(2.5), 1000, seed).matrix() == rho.matrix());
    }
  }

  SUBCASE("fixed seed is reproducible; different seeds differ") {
    const auto a = trajectory_oracle(psi, Tau(1.0), 10000, 5).matrix();
    const auto b = trajectory_oracle(psi, Tau(1.0), 10000, 5).matrix();
    const auto c = trajectory_oracle(psi, Tau(1.0), 10000, 6).matrix();
    CHECK(a == b);
    CHECK(a != c);
  }

  SUBCASE("zero trajectories rejected") {
    CHECK_THROWS_AS(trajectory_oracle(psi, Tau(1.0), 0, 1), std::invalid_argument);
  }

  SUBCASE("a local qutrit S_z = diag(1,-1,-1) cannot reproduce the mask") {
    // Phase class of |ab> under S_z^A + S_z^B.
    const int s[3] = {1, -1, -1};
    auto local = [&](int idx) { return s[idx / 3] + s[idx % 3]; };
    // |01> (index 1) and |12> (index 5) land in different classes, so their
    // coherence would decay, whereas the mask keeps it at 1.
    CHECK(local(1) != local(5));
    CHECK(dephasing_mask(Tau(3.0))(1, 5) == 1.0);
    // The joint generator puts them in the same class.
    CHECK(kDephasingGenerator[1] == kDephasingGenerator[5]);
  }
}
