#pragma once

// The invariant suite behind `spinhiggs check`: one entry per acceptance
// criterion 1-9, each a list of measured residuals against fixed limits.
// Random samples are drawn from streams of the given seed; trajectory starts
// are fixed presets so that every seed integrates the same orbits.

#include <cstdint>
#include <string>
#include <vector>

#include "spinhiggs/cli/json_io.hpp"

namespace spinhiggs {

enum class CheckOp { Le, Ge };

struct CheckItem {
  std::string name;
  double value;
  CheckOp op;
  double limit;

  bool pass() const;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<CheckItem> checks;
  std::string error;     // set when the criterion threw
  double seconds = 0.0;  // wall time; not serialized

  bool pass() const;
};

struct CheckReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;

  bool pass() const;
};

inline constexpr int kCriterionCount = 9;

// id in 1..9. Never throws for numerical failures; those land in `error`.
CriterionResult run_criterion(int id, std::uint64_t seed);
CheckReport run_check_suite(std::uint64_t seed);

Json to_json(const CheckReport& r);

}  // namespace spinhiggs
