// channel.hpp: collective dephasing of two qutrits.
//
// Three equivalent routes to rho(tau):
//   * Kraus sum over three diagonal operators,
//   * elementwise decay mask (production path),
//   * Monte Carlo average over random collective phase kicks (validation).

#pragma once

#include "qtd/qcore.hpp"

#include <array>
#include <cstdint>

namespace qtd {

/// Dimensionless time tau = Gamma * t. Throws on negative or non-finite input.
class Tau {
 public:
  explicit Tau(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// The diagonal of each Kraus operator D_1, D_2, D_3.
struct KrausSet {
  std::array<Eigen::Matrix<double, kPairDim, 1>, 3> diagonals;

  ComplexMatrix op(int k) const;
  /// max |sum_k D_k^dagger D_k - I|.
  double completeness_deviation() const;
};

using DephasingMask = Eigen::Matrix<double, kPairDim, kPairDim>;

enum class ChannelMode { kraus, analytic };

/// gamma = exp(-tau / 2).
double gamma(Tau tau);

KrausSet kraus_set(Tau tau);

/// Factor multiplying rho_ij: 1, gamma or gamma^4.
DephasingMask dephasing_mask(Tau tau);

DensityMatrix apply_channel(const DensityMatrix& rho, Tau tau,
                            ChannelMode mode = ChannelMode::analytic);

/// Generator eigenvalue of each basis state for the collective phase kick
/// U = exp(i phi G). Three classes: {0}, the decoherence-free block
/// {1,2,3,5,6,7}, and {4,8}.
inline constexpr std::array<int, kPairDim> kDephasingGenerator = {1, 0, 0, 0, -1, 0, 0, 0, -1};

/// Var(phi) per unit tau. A unit generator gap then decays as exp(-tau/2).
inline constexpr double kPhaseVariancePerTau = 1.0;

/// Monte Carlo average of U rho U^dagger over n_traj Gaussian phase draws.
/// Deterministic for a fixed seed and independent of the OpenMP thread count.
DensityMatrix trajectory_oracle(const DensityMatrix& rho, Tau tau, std::uint64_t n_traj,
                                std::uint64_t seed);

}  // namespace qtd
