#include "qtd/sweep.hpp"

#include "qtd/entanglement.hpp"
#include "qtd/kernels.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#ifndef QTD_VERSION
#define QTD_VERSION "0.0.0"
#endif

namespace qtd {

std::string_view artifact_version() { return QTD_VERSION; }

std::string_view to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::family: return "family";
    case SweepFamily::random: return "random";
    case SweepFamily::bell: return "bell";
    case SweepFamily::validate: return "validate";
  }
  return "unknown";
}

void validate_config(const SweepConfig& config) {
  if (config.steps < 2) {
    throw std::invalid_argument(fmt::format("steps must be >= 2, got {}", config.steps));
  }
  if (!(config.tau_max > 0.0) || !std::isfinite(config.tau_max)) {
    throw std::invalid_argument(fmt::format("tau-max must be finite and > 0, got {}", config.tau_max));
  }
  if (config.family == SweepFamily::family || config.family == SweepFamily::bell) {
    (void)FamilyParams(config.alpha, config.beta);
  }
  if (config.family == SweepFamily::random && config.n_samples < 1) {
    throw std::invalid_argument(fmt::format("samples must be >= 1, got {}", config.n_samples));
  }
}

std::vector<double> tau_grid(double tau_max, int steps) {
  if (steps < 2) throw std::invalid_argument("tau_grid: steps must be >= 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) grid[static_cast<std::size_t>(k)] = tau_max * k / (steps - 1);
  grid.back() = tau_max;
  return grid;
}

namespace {

SweepRecord record_from(std::uint64_t sample_id, double tau, const PtSpectrumReport& report) {
  SweepRecord row;
  row.sample_id = sample_id;
  row.tau = tau;
  row.negativity = report.negativity;
  row.min_pt_eigenvalue = report.min_eigenvalue;
  row.is_npt = report.is_npt;
  return row;
}

std::string real(double x) { return fmt::format("{:.17g}", x); }

nlohmann::json verdict_json(const NonlocalityVerdict& verdict) {
  nlohmann::json j;
  j["expectation_at_zero"] = verdict.expectation_at_zero;
  j["asymptote"] = verdict.asymptote;
  j["regime"] = std::string(to_string(verdict.regime));
  if (verdict.death_time && std::isfinite(*verdict.death_time)) {
    j["death_time"] = *verdict.death_time;
  } else {
    j["death_time"] = nullptr;
  }
  return j;
}

}  // namespace

SweepTable compute_family_sweep(const SweepConfig& config) {
  validate_config(config);
  const FamilyParams params(config.alpha, config.beta);
  const std::vector<double> taus = tau_grid(config.tau_max, config.steps);

  SweepTable table;
  table.rows.resize(taus.size());
  const auto n = static_cast<std::int64_t>(taus.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < n; ++k) {
    const double tau = taus[static_cast<std::size_t>(k)];
    SweepRecord row = record_from(0, tau, pt_report(evolved_rho_alpha_beta(params, Tau(tau))));
    row.bell_expectation = analytic_bell_expectation(params, Tau(tau));
    table.rows[static_cast<std::size_t>(k)] = row;
  }

  const InvariantEigenvalueResult invariant = invariant_eigenvalue_check(params, taus);
  table.summary["invariant_eigenvalue"] = {{"found", invariant.found},
                                           {"witness", invariant.witness},
                                           {"max_deviation", invariant.max_deviation}};
  return table;
}

SweepTable compute_random_sweep(const SweepConfig& config) {
  validate_config(config);
  const std::vector<double> taus = tau_grid(config.tau_max, config.steps);
  const std::vector<PureState> ensemble =
      haar_random_pure({static_cast<std::uint64_t>(config.n_samples), config.seed});

  std::vector<DensityMatrix> initial;
  initial.reserve(ensemble.size());
  for (const PureState& psi : ensemble) initial.push_back(DensityMatrix::from_pure(psi));

  const std::vector<PtSpectrumReport> spectra = kernels::omp::evolve_spectra(initial, taus);

  SweepTable table;
  table.rows.reserve(spectra.size());
  std::size_t npt_rows = 0;
  for (std::size_t s = 0; s < initial.size(); ++s) {
    for (std::size_t t = 0; t < taus.size(); ++t) {
      const PtSpectrumReport& report = spectra[s * taus.size() + t];
      table.rows.push_back(record_from(s, taus[t], report));
      npt_rows += report.is_npt ? 1 : 0;
    }
  }
  table.summary["npt_rows"] = npt_rows;
  table.summary["total_rows"] = table.rows.size();
  return table;
}

SweepTable compute_bell_sweep(const SweepConfig& config) {
  validate_config(config);
  const FamilyParams params(config.alpha, config.beta);
  const std::vector<double> taus = tau_grid(config.tau_max, config.steps);
  const BellOperator op = dfs_bell_operator();

  SweepTable table;
  table.has_bell_numeric = true;
  table.rows.resize(taus.size());
  const auto n = static_cast<std::int64_t>(taus.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < n; ++k) {
    const double tau = taus[static_cast<std::size_t>(k)];
    const DensityMatrix rho = evolved_rho_alpha_beta(params, Tau(tau));
    SweepRecord row = record_from(0, tau, pt_report(rho));
    row.bell_expectation = analytic_bell_expectation(params, Tau(tau));
    row.bell_numeric = expectation(op.matrix, rho);
    table.rows[static_cast<std::size_t>(k)] = row;
  }

  const NonlocalityVerdict verdict = nonlocality_verdict(params);
  table.summary["verdict"] = verdict_json(verdict);
  const auto bisected = death_time_by_bisection(params);
  table.summary["death_time_bisection"] =
      bisected ? nlohmann::json(*bisected) : nlohmann::json(nullptr);
  double worst = 0.0;
  for (const SweepRecord& row : table.rows) {
    worst = std::max(worst, std::abs(*row.bell_expectation - *row.bell_numeric));
  }
  table.summary["max_analytic_numeric_gap"] = worst;
  return table;
}

std::string format_csv(const SweepTable& table) {
  std::string out = "sample_id,tau,negativity,min_pt_eigenvalue,bell_expectation,is_npt";
  if (table.has_bell_numeric) out += ",bell_numeric,violates";
  out += '\n';
  for (const SweepRecord& row : table.rows) {
    out += fmt::format("{},{},{},{},{},{}", row.sample_id, real(row.tau), real(row.negativity),
                       real(row.min_pt_eigenvalue),
                       row.bell_expectation ? real(*row.bell_expectation) : std::string(),
                       row.is_npt ? "true" : "false");
    if (table.has_bell_numeric) {
      const bool violates = row.bell_expectation && *row.bell_expectation > kClassicalBound;
      out += fmt::format(",{},{}", row.bell_numeric ? real(*row.bell_numeric) : std::string(),
                         violates ? "true" : "false");
    }
    out += '\n';
  }
  return out;
}

std::filesystem::path manifest_path(const std::filesystem::path& csv_path) {
  return std::filesystem::path(csv_path.string() + ".manifest.json");
}

nlohmann::json build_manifest(const SweepConfig& config, const SweepTable& table,
                              double wall_seconds) {
  nlohmann::json m;
  m["artifact_version"] = std::string(artifact_version());
  m["config"] = {{"family", std::string(to_string(config.family))},
                 {"alpha", config.alpha},
                 {"beta", config.beta},
                 {"tau_max", config.tau_max},
                 {"steps", config.steps},
                 {"n_samples", config.n_samples},
                 {"seed", config.seed},
                 {"out_path", config.out_path.string()}};
  m["seed"] = config.seed;
  m["rows"] = table.rows.size();
  m["wall_clock_seconds"] = wall_seconds;
  m["summary"] = table.summary;
  return m;
}

void write_outputs(const SweepConfig& config, const SweepTable& table, double wall_seconds) {
  auto write_file = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
  };
  write_file(config.out_path, format_csv(table));
  write_file(manifest_path(config.out_path),
             build_manifest(config, table, wall_seconds).dump(2) + "\n");
}

SweepTable run_sweep(const SweepConfig& config) {
  if (config.out_path.empty()) throw std::invalid_argument("--out is required");
  const auto start = std::chrono::steady_clock::now();
  SweepTable table;
  switch (config.family) {
    case SweepFamily::family: table = compute_family_sweep(config); break;
    case SweepFamily::random: table = compute_random_sweep(config); break;
    case SweepFamily::bell: table = compute_bell_sweep(config); break;
    case SweepFamily::validate:
      throw std::invalid_argument("run_sweep: validate is not a sweep");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_outputs(config, table, seconds);
  return table;
}

}  // namespace qtd
