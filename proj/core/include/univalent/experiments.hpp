#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "univalent/classes.hpp"
#include "univalent/search.hpp"

namespace univalent {

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::size_t resolution = 201;          // requested lattice points per dim
  std::optional<std::size_t> samples;    // overrides the sampler budget of sampling experiments
  std::size_t grid_budget = 1'000'000;   // lattice points per sub-search; caps the resolution
};

enum class CheckKind {
  Sharp,    // search must reach the target (an attained bound) within tolerance
  Sampled,  // random members must respect `bound`; best observed must reach `target`
};

/// One optimisation or sampling result inside an experiment.
struct CheckResult {
  std::string objective;     // e.g. "|T_2(2)|"
  Sense sense = Sense::Maximize;
  CheckKind kind = CheckKind::Sharp;
  std::string search_space;  // human readable description of everything searched
  SearchDomain domain;       // domain of the winning sub-search (empty for sampled checks)
  double best_value = 0.0;
  std::vector<double> argmax;  // optimiser in `domain` coordinates (argmin for Minimize)
  std::optional<FunctionSpec> witness;
  double target = 0.0;
  double deviation = 0.0;  // best_value - target
  double tolerance = 0.0;
  std::string reference;   // the extremal function the target is attained at
  std::optional<FunctionSpec> reference_spec;
  double reference_value = 0.0;  // objective evaluated at reference_spec
  std::optional<double> bound;   // proven bound checked by sampled checks
  std::optional<double> lower_bound;
  std::size_t violations = 0;
  std::size_t tie_count = 1;
  std::vector<std::vector<double>> ties;
  std::size_t evaluations = 0;
  std::string note;
  bool passed = false;
};

struct ExperimentReport {
  std::string id;
  std::string title;
  std::string class_label;
  bool lower_bound_demo = false;  // class S searched through starlike members only
  std::vector<CheckResult> checks;
  std::size_t samples_used = 0;
  double runtime_seconds = 0.0;

  bool passed() const;
  std::size_t violations() const;
};

struct ExperimentInfo {
  std::string id;
  std::string title;
};

/// E1..E16 in order.
const std::vector<ExperimentInfo>& experiment_registry();
bool is_registered_experiment(std::string_view id);

/// Runs the registered pipeline for `id` (class generator -> Taylor series -> determinant
/// functional, grid search then Nelder-Mead from the 16 best cells, or sampling).
/// Throws UnknownExperimentId.
ExperimentReport extremal_experiment(std::string_view id, const ExperimentConfig& config = {});

std::string_view to_string(Sense sense) noexcept;
std::string_view to_string(CheckKind kind) noexcept;

}  // namespace univalent
