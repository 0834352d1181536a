// entanglement.hpp: negativity, PT spectrum, the closed-form negative PT
// eigenvalue of rho_{alpha,beta}, and the realignment (CCNR) test.

#pragma once

#include "qtd/channel.hpp"
#include "qtd/qcore.hpp"
#include "qtd/states.hpp"

#include <array>
#include <span>

namespace qtd {

/// A PT eigenvalue counts as negative below -kNptTolerance.
inline constexpr double kNptTolerance = 1e-10;

/// Realigned trace norm must exceed 1 by this much to certify entanglement.
inline constexpr double kCcnrMargin = 1e-10;

struct PtSpectrumReport {
  std::array<double, kPairDim> eigenvalues{};  // ascending
  double negativity = 0.0;
  double min_eigenvalue = 0.0;
  bool is_npt = false;
};

/// Sum of |negative eigenvalues| of rho^{T_B}; 1 for a maximally entangled pair.
double negativity(const DensityMatrix& rho);

/// (||rho^{T_B}||_1 - 1) / 2, the same quantity by the trace-norm route.
double negativity_from_trace_norm(const DensityMatrix& rho);

PtSpectrumReport pt_report(const DensityMatrix& rho);

/// (1/9) [(1-a)(1-b) - 3 sqrt(a^2 (1-b)^2 - a b (1-b) + b^2)].
double analytic_negative_eigenvalue(const FamilyParams& params);

struct InvariantEigenvalueResult {
  bool found = false;
  double witness = 0.0;           // the analytic value that was tracked
  double max_deviation = 0.0;     // worst distance to the nearest eigenvalue
};

/// Is the closed-form eigenvalue present (within 1e-10) in the PT spectrum of
/// the evolved state at every requested time? Needs at least two times.
InvariantEigenvalueResult invariant_eigenvalue_check(const FamilyParams& params,
                                                     std::span<const double> taus);

struct CcnrResult {
  bool entangled = false;
  double value = 0.0;  // trace norm of the realigned matrix
};

CcnrResult ccnr_entangled(const DensityMatrix& rho);

/// Smallest alpha above which rho_{alpha,beta} is NPT for every beta in
/// [0, 1], found by bisection on max over beta of the closed-form eigenvalue.
double npt_alpha_boundary();

}  // namespace qtd
