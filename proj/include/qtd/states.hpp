// states.hpp: state families: isotropic, the rho_{alpha,beta} mixture with
// the decoherence-free maximally entangled state, psi_mu / psi_nu, and Haar
// random pure states.

#pragma once

#include "qtd/channel.hpp"
#include "qtd/qcore.hpp"

#include <cstdint>
#include <vector>

namespace qtd {

/// Mixture weights; both must lie in [0, 1].
class FamilyParams {
 public:
  FamilyParams(double alpha, double beta);
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

struct RandomEnsembleSpec {
  std::uint64_t n_samples = 1;
  std::uint64_t seed = 0;
};

/// alpha |Psi00><Psi00| + (1 - alpha) I/9.
DensityMatrix isotropic(double alpha);

/// beta |DFS><DFS| + (1 - beta) isotropic(alpha).
DensityMatrix rho_alpha_beta(const FamilyParams& params);

/// Closed-form evolution: only the isotropic part decays.
DensityMatrix evolved_rho_alpha_beta(const FamilyParams& params, Tau tau);

/// (|00> + mu |11> + |22>) / sqrt(2 + mu^2), mu >= 0.
PureState psi_mu(double mu);

/// nu (|00> + |11>) + sqrt(1 - 2 nu^2) |22>, 0 <= nu <= 1/sqrt(2).
PureState psi_nu(double nu);

/// Normalized i.i.d. complex Gaussian vectors. Sample k draws from its own
/// stream (seed, k), so the ensemble does not depend on the thread count.
std::vector<PureState> haar_random_pure(const RandomEnsembleSpec& spec);

/// Tr(rho_A^2) of a pure two-qutrit state.
double reduced_purity(const PureState& psi);

}  // namespace qtd
