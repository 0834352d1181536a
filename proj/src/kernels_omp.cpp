#include "qtd/kernels.hpp"

#include "qtd/channel.hpp"

#include <omp.h>

#include <stdexcept>

namespace qtd::kernels::omp {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int n) {
  if (n < 1) throw std::invalid_argument("set_threads: need at least one thread");
  omp_set_num_threads(n);
}

ComplexMatrix trajectory_average(const ComplexMatrix& rho, double tau, std::uint64_t n_traj,
                                 std::uint64_t seed) {
  if (n_traj == 0) throw std::invalid_argument("trajectory_average: n_traj must be >= 1");
  const std::int64_t n_chunks =
      static_cast<std::int64_t>((n_traj + kTrajectoryChunk - 1) / kTrajectoryChunk);
  std::vector<ComplexMatrix> partial(static_cast<std::size_t>(n_chunks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    const std::uint64_t first = static_cast<std::uint64_t>(c) * kTrajectoryChunk;
    const std::uint64_t count = std::min(kTrajectoryChunk, n_traj - first);
    partial[static_cast<std::size_t>(c)] = trajectory_chunk_sum(tau, first, count, seed);
  }

  // Same accumulation order as the serial reference.
  ComplexMatrix phases = ComplexMatrix::Zero(kPairDim, kPairDim);
  for (const ComplexMatrix& p : partial) phases += p;
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
  std::vector<ComplexVector> out(n_samples);
  const auto n = static_cast<std::int64_t>(n_samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < n; ++s) {
    out[static_cast<std::size_t>(s)] = gaussian_vector(seed, static_cast<std::uint64_t>(s));
  }
  return out;
}

std::vector<PtSpectrumReport> evolve_spectra(std::span<const DensityMatrix> initial,
                                             std::span<const double> taus) {
  const auto n_tau = static_cast<std::int64_t>(taus.size());
  const auto n_cells = static_cast<std::int64_t>(initial.size()) * n_tau;
  std::vector<PtSpectrumReport> out(static_cast<std::size_t>(n_cells));
  // Validate taus up front so no exception escapes the parallel region.
  for (double tau : taus) (void)Tau(tau);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t cell = 0; cell < n_cells; ++cell) {
    const auto s = static_cast<std::size_t>(cell / n_tau);
    const auto t = static_cast<std::size_t>(cell % n_tau);
    out[static_cast<std::size_t>(cell)] = pt_report(apply_channel(initial[s], Tau(taus[t])));
  }
  return out;
}

}  // namespace qtd::kernels::omp
