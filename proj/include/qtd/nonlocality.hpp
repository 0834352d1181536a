// nonlocality.hpp: CGLMP Bell operator for two qutrits, its conjugation onto
// the decoherence-free maximally entangled state, and the closed-form
// expectation values used to classify sudden death of nonlocality.

#pragma once

#include "qtd/channel.hpp"
#include "qtd/qcore.hpp"
#include "qtd/states.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace qtd {

/// Local-realistic bound of the CGLMP inequality. Equality does not violate.
inline constexpr double kClassicalBound = 2.0;

enum class BellConstruction { standard, dfs_conjugated };

struct BellOperator {
  ComplexMatrix matrix;  // real symmetric, traceless
  BellConstruction label = BellConstruction::standard;
};

/// The 9x9 operator optimal for |Psi00>: 2 at (0,8); 2/sqrt(3) at (0,4),
/// (1,5), (3,7), (4,8); mirrored.
BellOperator bell_operator();

/// Unitary V with V |Psi00> = DFS state: the cyclic shift |k> -> |k-1> on
/// qutrit B.
ComplexMatrix dfs_conjugating_unitary();

/// V B V^dagger.
BellOperator dfs_bell_operator();

/// <B~> on rho_{alpha,beta}(tau):
/// (4/9) (sqrt(3) alpha (1-beta) e^{-2 tau} + (3 + 2 sqrt(3)) beta).
double analytic_bell_expectation(const FamilyParams& params, Tau tau);

/// <B> on psi_mu: (12 + 8 sqrt(3) mu) / (6 + 3 mu^2).
double bell_mu(double mu);

/// <B> on psi_nu: 4 nu (sqrt(3) nu + (3 + sqrt(3)) sqrt(1 - 2 nu^2)) / 3.
double bell_nu(double nu);

enum class NonlocalityRegime { always_local, violates_then_dies, always_nonlocal };

std::string_view to_string(NonlocalityRegime regime);

struct NonlocalityVerdict {
  double expectation_at_zero = 0.0;
  double asymptote = 0.0;
  std::optional<double> death_time;
  NonlocalityRegime regime = NonlocalityRegime::always_local;
};

NonlocalityVerdict nonlocality_verdict(const FamilyParams& params);

/// Independent guard on the closed-form death time: bisection in tau on the
/// numeric trace against the evolved state. Empty when no crossing exists
/// within [0, tau_max].
std::optional<double> death_time_by_bisection(const FamilyParams& params, double tau_max = 50.0,
                                              double tau_tolerance = 1e-10);

/// 9 / (2 (3 + 2 sqrt(3))).
double isotropic_nonlocality_threshold();

/// Same threshold from bisection on <B> over isotropic states.
double isotropic_threshold_by_bisection(double tolerance = 1e-12);

struct Extremum {
  double argmax = 0.0;
  double value = 0.0;
};

Extremum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                 double tolerance = 1e-12);

/// Maximizer of bell_mu over [0, 2].
Extremum maximize_bell_mu();

/// Maximizer of bell_nu over [0, 1/sqrt(2)].
Extremum maximize_bell_nu();

}  // namespace qtd
