#include "qtd/kernels.hpp"

#include "qtd/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qtd::kernels {

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

ComplexMatrix trajectory_chunk_sum(double tau, std::uint64_t first, std::uint64_t count,
                                   std::uint64_t seed) {
  std::mt19937_64 engine = stream_engine(seed, first / kTrajectoryChunk);
  const double spread = std::sqrt(kPhaseVariancePerTau * tau);
  std::normal_distribution<double> phase(0.0, spread > 0.0 ? spread : 1.0);

  ComplexMatrix sum = ComplexMatrix::Zero(kPairDim, kPairDim);
  for (std::uint64_t t = 0; t < count; ++t) {
    const double phi = spread > 0.0 ? phase(engine) : 0.0;
    for (int j = 0; j < kPairDim; ++j) {
      for (int i = 0; i < kPairDim; ++i) {
        const int gap = kDephasingGenerator[i] - kDephasingGenerator[j];
        sum(i, j) += gap == 0 ? Complex(1.0, 0.0) : std::polar(1.0, phi * gap);
      }
    }
  }
  return sum;
}

ComplexVector gaussian_vector(std::uint64_t seed, std::uint64_t sample) {
  std::mt19937_64 engine = stream_engine(seed, sample);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(kPairDim);
  for (int i = 0; i < kPairDim; ++i) {
    const double re = normal(engine);
    const double im = normal(engine);
    v(i) = Complex(re, im);
  }
  return v;
}

namespace serial {

ComplexMatrix trajectory_average(const ComplexMatrix& rho, double tau, std::uint64_t n_traj,
                                 std::uint64_t seed) {
  if (n_traj == 0) throw std::invalid_argument("trajectory_average: n_traj must be >= 1");
  ComplexMatrix phases = ComplexMatrix::Zero(kPairDim, kPairDim);
  for (std::uint64_t first = 0; first < n_traj; first += kTrajectoryChunk) {
    const std::uint64_t count = std::min(kTrajectoryChunk, n_traj - first);
    phases += trajectory_chunk_sum(tau, first, count, seed);
  }
  phases /= static_cast<double>(n_traj);

  ComplexMatrix out(kPairDim, kPairDim);
  for (int i = 0; i < kPairDim; ++i) {
    out(i, i) = rho(i, i) * phases(i, i);
    for (int j = i + 1; j < kPairDim; ++j) {
      out(i, j) = rho(i, j) * phases(i, j);
      out(j, i) = std::conj(out(i, j));
    }
  }
  return out;
}

std::vector<ComplexVector> gaussian_vectors(std::uint64_t n_samples, std::uint64_t seed) {
  std::vector<ComplexVector> out;
  out.reserve(n_samples);
  for (std::uint64_t s = 0; s < n_samples; ++s) out.push_back(gaussian_vector(seed, s));
  return out;
}

std::vector<PtSpectrumReport> evolve_spectra(std::span<const DensityMatrix> initial,
                                             std::span<const double> taus) {
  std::vector<PtSpectrumReport> out;
  out.reserve(initial.size() * taus.size());
  for (const DensityMatrix& rho : initial) {
    for (double tau : taus) out.push_back(pt_report(apply_channel(rho, Tau(tau))));
  }
  return out;
}

}  // namespace serial

}  // namespace qtd::kernels
