// Serial reference vs OpenMP kernels: wall time and bit-identity of results.

#include "qtd/entanglement.hpp"
#include "qtd/kernels.hpp"
#include "qtd/states.hpp"
#include "qtd/sweep.hpp"

#include <fmt/format.h>
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>

namespace {

double seconds_of(const std::function<void()>& body, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
  fmt::print("{:<28} serial {:9.4f} s   omp {:9.4f} s   speedup {:5.2f}x   identical={}\n", name,
             serial, parallel, serial / parallel, identical);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  fmt::print("OpenMP threads: {}\n", omp_get_max_threads());

  {
    const qtd::ComplexMatrix rho = qtd::DensityMatrix::from_pure(qtd::psi00()).matrix();
    constexpr std::uint64_t n = 1'000'000;
    qtd::ComplexMatrix a, b;
    const double ts = seconds_of([&] { a = qtd::kernels::serial::trajectory_average(rho, 1.0, n, 7); }, repeats);
    const double tp = seconds_of([&] { b = qtd::kernels::omp::trajectory_average(rho, 1.0, n, 7); }, repeats);
    report("trajectory_average 1e6", ts, tp, a == b);
  }

  {
    std::vector<qtd::ComplexVector> a, b;
    const double ts = seconds_of([&] { a = qtd::kernels::serial::gaussian_vectors(100'000, 7); }, repeats);
    const double tp = seconds_of([&] { b = qtd::kernels::omp::gaussian_vectors(100'000, 7); }, repeats);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i] == b[i];
    report("gaussian_vectors 1e5", ts, tp, same);
  }

  {
    std::vector<qtd::DensityMatrix> initial;
    for (const auto& psi : qtd::haar_random_pure({100, 42})) initial.push_back(qtd::DensityMatrix::from_pure(psi));
    const std::vector<double> taus = qtd::tau_grid(10.0, 200);
    std::vector<qtd::PtSpectrumReport> a, b;
    const double ts = seconds_of([&] { a = qtd::kernels::serial::evolve_spectra(initial, taus); }, repeats);
    const double tp = seconds_of([&] { b = qtd::kernels::omp::evolve_spectra(initial, taus); }, repeats);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].eigenvalues == b[i].eigenvalues;
    report("evolve_spectra 100x200", ts, tp, same);
  }
  return 0;
}
