#include "qtd/states.hpp"

#include "qtd/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qtd {

namespace {

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(x));
  }
}

ComplexMatrix isotropic_matrix(double alpha) {
  return alpha * psi00().projector() +
         ((1.0 - alpha) / kPairDim) * ComplexMatrix::Identity(kPairDim, kPairDim);
}

}  // namespace

FamilyParams::FamilyParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(beta, "beta");
}

DensityMatrix isotropic(double alpha) {
  require_unit_interval(alpha, "alpha");
  return DensityMatrix(isotropic_matrix(alpha));
}

DensityMatrix rho_alpha_beta(const FamilyParams& params) {
  const double beta = params.beta();
  return DensityMatrix(beta * dfs_state().projector() +
                       (1.0 - beta) * isotropic_matrix(params.alpha()));
}

DensityMatrix evolved_rho_alpha_beta(const FamilyParams& params, Tau tau) {
  const double beta = params.beta();
  const DensityMatrix decayed = apply_channel(isotropic(params.alpha()), tau);
  return DensityMatrix(beta * dfs_state().projector() + (1.0 - beta) * decayed.matrix());
}

PureState psi_mu(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("psi_mu: mu must be finite and >= 0, got " + std::to_string(mu));
  }
  ComplexVector v = ComplexVector::Zero(kPairDim);
  v(pair_index(0, 0)) = 1.0;
  v(pair_index(1, 1)) = mu;
  v(pair_index(2, 2)) = 1.0;
  return PureState(v / std::sqrt(2.0 + mu * mu));
}

PureState psi_nu(double nu) {
  const double nu_max = 1.0 / std::numbers::sqrt2;
  if (!(nu >= 0.0 && nu <= nu_max)) {
    throw std::invalid_argument("psi_nu: nu must lie in [0, 1/sqrt(2)], got " +
                                std::to_string(nu));
  }
  ComplexVector v = ComplexVector::Zero(kPairDim);
  v(pair_index(0, 0)) = nu;
  v(pair_index(1, 1)) = nu;
  v(pair_index(2, 2)) = std::sqrt(std::max(0.0, 1.0 - 2.0 * nu * nu));
  return PureState(v);
}

std::vector<PureState> haar_random_pure(const RandomEnsembleSpec& spec) {
  if (spec.n_samples == 0) {
    throw std::invalid_argument("haar_random_pure: n_samples must be >= 1");
  }
  const auto raw = kernels::omp::gaussian_vectors(spec.n_samples, spec.seed);
  std::vector<PureState> out;
  out.reserve(raw.size());
  for (const auto& v : raw) out.push_back(PureState::normalized(v));
  return out;
}

double reduced_purity(const PureState& psi) {
  // psi_{ab} as a 3x3 coefficient matrix C; rho_A = C C^dagger.
  ComplexMatrix c(kQutritDim, kQutritDim);
  for (int a = 0; a < kQutritDim; ++a)
    for (int b = 0; b < kQutritDim; ++b) c(a, b) = psi[pair_index(a, b)];
  const ComplexMatrix rho_a = c * c.adjoint();
  return (rho_a * rho_a).trace().real();
}

}  // namespace qtd
