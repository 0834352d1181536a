// validation.hpp: self-check suite behind `qutrit_lab validate`.

#pragma once

#include <string>
#include <vector>

namespace qtd {

struct ValidationCheck {
  std::string name;
  double measured = 0.0;   // deviation, or the reported value for info rows
  double tolerance = 0.0;  // unused for info rows
  bool passed = true;
  bool informational = false;  // reported only, never fails the run
  std::string note;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
  std::string to_text() const;
};

/// Channel cross-checks (Kraus / mask / trajectories), closed-form identities
/// for the PT eigenvalue and Bell expectations, thresholds and the Haar
/// sampler oracle.
ValidationReport run_validation();

}  // namespace qtd
