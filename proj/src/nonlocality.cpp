#include "qtd/nonlocality.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qtd {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kMaxEntangledViolation = 4.0 * (3.0 + 2.0 * kSqrt3) / 9.0;

double numeric_dfs_expectation(const FamilyParams& params, double tau) {
  static const BellOperator op = dfs_bell_operator();
  return expectation(op.matrix, evolved_rho_alpha_beta(params, Tau(tau)));
}

}  // namespace

BellOperator bell_operator() {
  ComplexMatrix b = ComplexMatrix::Zero(kPairDim, kPairDim);
  const double c = 2.0 / kSqrt3;
  auto put = [&b](int i, int j, double v) {
    b(i, j) = v;
    b(j, i) = v;
  };
  put(0, 8, 2.0);
  put(0, 4, c);
  put(1, 5, c);
  put(3, 7, c);
  put(4, 8, c);
  return {b, BellConstruction::standard};
}

ComplexMatrix dfs_conjugating_unitary() {
  ComplexMatrix shift_down = ComplexMatrix::Zero(kQutritDim, kQutritDim);
  for (int k = 0; k < kQutritDim; ++k) shift_down((k + kQutritDim - 1) % kQutritDim, k) = 1.0;
  return tensor_product(ComplexMatrix::Identity(kQutritDim, kQutritDim), shift_down);
}

BellOperator dfs_bell_operator() {
  const ComplexMatrix v = dfs_conjugating_unitary();
  return {v * bell_operator().matrix * v.adjoint(), BellConstruction::dfs_conjugated};
}

double analytic_bell_expectation(const FamilyParams& params, Tau tau) {
  const double a = params.alpha();
  const double b = params.beta();
  return 4.0 * (kSqrt3 * a * (1.0 - b) * std::exp(-2.0 * tau.value()) + (3.0 + 2.0 * kSqrt3) * b) /
         9.0;
}

double bell_mu(double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("bell_mu: mu must be >= 0");
  return (12.0 + 8.0 * kSqrt3 * mu) / (6.0 + 3.0 * mu * mu);
}

double bell_nu(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0 / std::numbers::sqrt2)) {
    throw std::invalid_argument("bell_nu: nu must lie in [0, 1/sqrt(2)]");
  }
  const double tail = std::sqrt(std::max(0.0, 1.0 - 2.0 * nu * nu));
  return 4.0 * nu * (kSqrt3 * nu + (3.0 + kSqrt3) * tail) / 3.0;
}

std::string_view to_string(NonlocalityRegime regime) {
  switch (regime) {
    case NonlocalityRegime::always_local: return "always-local";
    case NonlocalityRegime::violates_then_dies: return "violates-then-dies";
    case NonlocalityRegime::always_nonlocal: return "always-nonlocal";
  }
  return "unknown";
}

NonlocalityVerdict nonlocality_verdict(const FamilyParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  NonlocalityVerdict verdict;
  verdict.expectation_at_zero = analytic_bell_expectation(params, Tau(0.0));
  verdict.asymptote = kMaxEntangledViolation * b;

  if (verdict.asymptote > kClassicalBound) {
    verdict.regime = NonlocalityRegime::always_nonlocal;
    return verdict;
  }
  if (verdict.expectation_at_zero <= kClassicalBound) {
    verdict.regime = NonlocalityRegime::always_local;
    return verdict;
  }
  // expectation_at_zero > 2 >= asymptote, so alpha (1 - beta) > 0 here.
  // Solve (4/9)(sqrt3 a (1-b) x + (3+2 sqrt3) b) = 2 for x = e^{-2 tau}.
  const double x = (4.5 - (3.0 + 2.0 * kSqrt3) * b) / (kSqrt3 * a * (1.0 - b));
  verdict.regime = NonlocalityRegime::violates_then_dies;
  verdict.death_time = x > 0.0 ? -std::log(x) / 2.0 : std::numeric_limits<double>::infinity();
  return verdict;
}

std::optional<double> death_time_by_bisection(const FamilyParams& params, double tau_max,
                                              double tau_tolerance) {
  auto excess = [&params](double tau) { return numeric_dfs_expectation(params, tau) - kClassicalBound; };
  double lo = 0.0;
  double hi = tau_max;
  if (!(excess(lo) > 0.0) || excess(hi) > 0.0) return std::nullopt;
  while (hi - lo > tau_tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double isotropic_nonlocality_threshold() { return 9.0 / (2.0 * (3.0 + 2.0 * kSqrt3)); }

double isotropic_threshold_by_bisection(double tolerance) {
  const BellOperator op = bell_operator();
  auto value = [&op](double alpha) { return expectation(op.matrix, isotropic(alpha)); };
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (value(mid) > kClassicalBound) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

Extremum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                 double tolerance) {
  if (!(hi > lo)) throw std::invalid_argument("golden_section_maximize: empty interval");
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

Extremum maximize_bell_mu() { return golden_section_maximize(bell_mu, 0.0, 2.0); }

Extremum maximize_bell_nu() {
  return golden_section_maximize(bell_nu, 0.0, 1.0 / std::numbers::sqrt2);
}

}  // namespace qtd
