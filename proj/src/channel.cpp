#include "qtd/channel.hpp"

#include "qtd/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtd {

Tau::Tau(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("Tau: expected finite tau >= 0, got " + std::to_string(value));
  }
}

double gamma(Tau tau) { return std::exp(-0.5 * tau.value()); }

ComplexMatrix KrausSet::op(int k) const {
  if (k < 0 || k > 2) throw std::out_of_range("KrausSet::op: index must be 0, 1 or 2");
  return diagonals[static_cast<std::size_t>(k)].cast<Complex>().asDiagonal();
}

double KrausSet::completeness_deviation() const {
  ComplexMatrix sum = ComplexMatrix::Zero(kPairDim, kPairDim);
  for (int k = 0; k < 3; ++k) {
    const ComplexMatrix d = op(k);
    sum += d.adjoint() * d;
  }
  return (sum - ComplexMatrix::Identity(kPairDim, kPairDim)).cwiseAbs().maxCoeff();
}

KrausSet kraus_set(Tau tau) {
  const double g = gamma(tau);
  const double g2 = g * g;
  const double w1 = std::sqrt(1.0 - g2);
  const double w2 = -g2 * std::sqrt(1.0 - g2);  // sign is unobservable in D^dagger rho D
  const double w3 = (1.0 - g2) * std::sqrt(1.0 + g2);

  KrausSet set;
  set.diagonals[0] << g, 1, 1, 1, g, 1, 1, 1, g;
  set.diagonals[1] << w1, 0, 0, 0, w2, 0, 0, 0, w2;
  set.diagonals[2] << 0, 0, 0, 0, w3, 0, 0, 0, w3;
  return set;
}

namespace {

// Power of gamma on each entry of rho(t), transcribed row by row.
constexpr int kMaskExponent[kPairDim][kPairDim] = {
    {0, 1, 1, 1, 4, 1, 1, 1, 4},
    {1, 0, 0, 0, 1, 0, 0, 0, 1},
    {1, 0, 0, 0, 1, 0, 0, 0, 1},
    {1, 0, 0, 0, 1, 0, 0, 0, 1},
    {4, 1, 1, 1, 0, 1, 1, 1, 0},
    {1, 0, 0, 0, 1, 0, 0, 0, 1},
    {1, 0, 0, 0, 1, 0, 0, 0, 1},
    {1, 0, 0, 0, 1, 0, 0, 0, 1},
    {4, 1, 1, 1, 0, 1, 1, 1, 0},
};

}  // namespace

DephasingMask dephasing_mask(Tau tau) {
  const double g = gamma(tau);
  const double g4 = (g * g) * (g * g);
  DephasingMask mask;
  for (int i = 0; i < kPairDim; ++i) {
    for (int j = 0; j < kPairDim; ++j) {
      switch (kMaskExponent[i][j]) {
        case 0: mask(i, j) = 1.0; break;
        case 1: mask(i, j) = g; break;
        default: mask(i, j) = g4; break;
      }
    }
  }
  return mask;
}

DensityMatrix apply_channel(const DensityMatrix& rho, Tau tau, ChannelMode mode) {
  if (mode == ChannelMode::kraus) {
    const KrausSet set = kraus_set(tau);
    ComplexMatrix out = ComplexMatrix::Zero(kPairDim, kPairDim);
    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix d = set.op(k);
      out += d.adjoint() * rho.matrix() * d;
    }
    return DensityMatrix(std::move(out));
  }
  const DephasingMask mask = dephasing_mask(tau);
  return DensityMatrix(rho.matrix().cwiseProduct(mask.cast<Complex>()));
}

DensityMatrix trajectory_oracle(const DensityMatrix& rho, Tau tau, std::uint64_t n_traj,
                                std::uint64_t seed) {
  if (n_traj == 0) {
    throw std::invalid_argument("trajectory_oracle: n_traj must be >= 1");
  }
  return DensityMatrix(kernels::omp::trajectory_average(rho.matrix(), tau.value(), n_traj, seed));
}

}  // namespace qtd
