// sweep.hpp: parameter sweeps behind the qutrit_lab CLI, their CSV rows and
// the JSON run manifest written next to each CSV.

#pragma once

#include "qtd/nonlocality.hpp"
#include "qtd/states.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qtd {

std::string_view artifact_version();

enum class SweepFamily { family, random, bell, validate };

std::string_view to_string(SweepFamily family);

/// Defaults for every sweep; each is overridable from the command line.
struct SweepDefaults {
  static constexpr double alpha = 0.999;
  static constexpr double beta = 0.999;
  static constexpr double tau_max = 10.0;
  static constexpr int steps = 200;
  static constexpr int n_samples = 100;
  static constexpr std::uint64_t seed = 42;
};

struct SweepConfig {
  SweepFamily family = SweepFamily::family;
  double alpha = SweepDefaults::alpha;
  double beta = SweepDefaults::beta;
  double tau_max = SweepDefaults::tau_max;
  int steps = SweepDefaults::steps;
  int n_samples = SweepDefaults::n_samples;
  std::uint64_t seed = SweepDefaults::seed;
  std::filesystem::path out_path;
};

/// Throws std::invalid_argument on steps < 2, tau_max <= 0, parameters out
/// of range, or n_samples < 1.
void validate_config(const SweepConfig& config);

/// steps points, uniformly spaced, both endpoints included.
std::vector<double> tau_grid(double tau_max, int steps);

struct SweepRecord {
  std::uint64_t sample_id = 0;
  double tau = 0.0;
  double negativity = 0.0;
  double min_pt_eigenvalue = 0.0;
  std::optional<double> bell_expectation;
  bool is_npt = false;
  std::optional<double> bell_numeric;  // bell sweeps only
};

struct SweepTable {
  std::vector<SweepRecord> rows;
  bool has_bell_numeric = false;
  nlohmann::json summary;  // sweep-specific manifest entries
};

SweepTable compute_family_sweep(const SweepConfig& config);
SweepTable compute_random_sweep(const SweepConfig& config);
SweepTable compute_bell_sweep(const SweepConfig& config);

/// Header: sample_id,tau,negativity,min_pt_eigenvalue,bell_expectation,is_npt
/// (bell sweeps append bell_numeric,violates). Reals use 17 significant digits.
std::string format_csv(const SweepTable& table);

/// `<csv path>.manifest.json`.
std::filesystem::path manifest_path(const std::filesystem::path& csv_path);

nlohmann::json build_manifest(const SweepConfig& config, const SweepTable& table,
                              double wall_seconds);

/// Writes CSV and manifest; throws std::runtime_error naming the path when a
/// file cannot be written.
void write_outputs(const SweepConfig& config, const SweepTable& table, double wall_seconds);

/// compute + write, timed.
SweepTable run_sweep(const SweepConfig& config);

}  // namespace qtd
