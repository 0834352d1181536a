// kernels.hpp: the data-parallel inner loops.
//
// Every kernel has a plain serial reference and an OpenMP version. Work is
// split into fixed units (trajectory chunks, samples, (sample, tau) cells)
// whose results are combined in index order, so both versions return
// bit-identical output for any thread count.

#pragma once

#include "qtd/entanglement.hpp"
#include "qtd/qcore.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qtd::kernels {

/// Trajectories per RNG stream in trajectory_average.
inline constexpr std::uint64_t kTrajectoryChunk = 4096;

/// Independent generator for stream `stream` under `seed`.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream);

/// Phase-kick factors e^{i phi (g_i - g_j)} averaged over one chunk of
/// trajectories; summed (not divided) so chunks can be combined exactly.
ComplexMatrix trajectory_chunk_sum(double tau, std::uint64_t first, std::uint64_t count,
                                   std::uint64_t seed);

/// One unnormalized 9-component standard complex Gaussian vector per sample.
ComplexVector gaussian_vector(std::uint64_t seed, std::uint64_t sample);

namespace serial {

ComplexMatrix trajectory_average(const ComplexMatrix& rho, double tau, std::uint64_t n_traj,
                                 std::uint64_t seed);

std::vector<ComplexVector> gaussian_vectors(std::uint64_t n_samples, std::uint64_t seed);

/// PT spectrum of apply_channel(initial[s], taus[t]) in row-major (s, t) order.
std::vector<PtSpectrumReport> evolve_spectra(std::span<const DensityMatrix> initial,
                                             std::span<const double> taus);

}  // namespace serial

namespace omp {

ComplexMatrix trajectory_average(const ComplexMatrix& rho, double tau, std::uint64_t n_traj,
                                 std::uint64_t seed);

std::vector<ComplexVector> gaussian_vectors(std::uint64_t n_samples, std::uint64_t seed);

std::vector<PtSpectrumReport> evolve_spectra(std::span<const DensityMatrix> initial,
                                             std::span<const double> taus);

int max_threads();
void set_threads(int n);

}  // namespace omp

}  // namespace qtd::kernels
