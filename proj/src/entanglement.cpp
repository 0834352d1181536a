#include "qtd/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtd {

namespace {

constexpr double kInvariantMatchTolerance = 1e-10;

double negative_part(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) {
    if (v < 0.0) sum -= v;
  }
  return sum;
}

}  // namespace

double negativity(const DensityMatrix& rho) {
  return negative_part(hermitian_eigenvalues(partial_transpose_b(rho)));
}

double negativity_from_trace_norm(const DensityMatrix& rho) {
  return 0.5 * (trace_norm(partial_transpose_b(rho)) - 1.0);
}

PtSpectrumReport pt_report(const DensityMatrix& rho) {
  const std::vector<double> values = hermitian_eigenvalues(partial_transpose_b(rho));
  PtSpectrumReport report;
  std::copy(values.begin(), values.end(), report.eigenvalues.begin());
  report.negativity = negative_part(values);
  report.min_eigenvalue = values.front();
  report.is_npt = report.min_eigenvalue < -kNptTolerance;
  return report;
}

double analytic_negative_eigenvalue(const FamilyParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double radicand = a * a * (1.0 - b) * (1.0 - b) - a * b * (1.0 - b) + b * b;
  return ((1.0 - a) * (1.0 - b) - 3.0 * std::sqrt(std::max(0.0, radicand))) / 9.0;
}

InvariantEigenvalueResult invariant_eigenvalue_check(const FamilyParams& params,
                                                     std::span<const double> taus) {
  if (taus.size() < 2) {
    throw std::invalid_argument("invariant_eigenvalue_check: need at least two time points");
  }
  InvariantEigenvalueResult result;
  result.witness = analytic_negative_eigenvalue(params);
  for (double tau : taus) {
    const PtSpectrumReport report = pt_report(evolved_rho_alpha_beta(params, Tau(tau)));
    double nearest = std::numeric_limits<double>::infinity();
    for (double v : report.eigenvalues) nearest = std::min(nearest, std::abs(v - result.witness));
    result.max_deviation = std::max(result.max_deviation, nearest);
  }
  result.found = result.max_deviation <= kInvariantMatchTolerance;
  return result;
}

CcnrResult ccnr_entangled(const DensityMatrix& rho) {
  CcnrResult result;
  result.value = trace_norm(realign(rho));
  result.entangled = result.value > 1.0 + kCcnrMargin;
  return result;
}

double npt_alpha_boundary() {
  // max over beta of the closed-form eigenvalue, by dense scan plus
  // golden-section refinement around the best grid point.
  auto worst_case = [](double alpha) {
    auto f = [alpha](double beta) { return analytic_negative_eigenvalue(FamilyParams(alpha, beta)); };
    constexpr int kGrid = 2000;
    int best = 0;
    double best_value = f(0.0);
    for (int i = 1; i <= kGrid; ++i) {
      const double v = f(double(i) / kGrid);
      if (v > best_value) {
        best_value = v;
        best = i;
      }
    }
    double lo = std::max(0.0, double(best - 1) / kGrid);
    double hi = std::min(1.0, double(best + 1) / kGrid);
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 100; ++it) {
      const double x1 = hi - ratio * (hi - lo);
      const double x2 = lo + ratio * (hi - lo);
      if (f(x1) < f(x2)) lo = x1; else hi = x2;
    }
    return std::max(best_value, f(0.5 * (lo + hi)));
  };

  // At alpha = 1/4 the beta = 0 end is exactly zero; at alpha = 1 every beta is NPT.
  double lo = 0.25;
  double hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (worst_case(mid) < 0.0) hi = mid; else lo = mid;
  }
  return hi;
}

}  // namespace qtd
