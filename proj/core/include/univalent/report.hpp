#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "univalent/determinants.hpp"
#include "univalent/experiments.hpp"
#include "univalent/lemma_oracles.hpp"
#include "univalent/series.hpp"
#include "univalent/typically_real.hpp"

namespace univalent {

inline constexpr int kReportSchemaVersion = 1;

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTargetMissed = 1;  // a sharp target was not reached, nothing violated
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

struct RunManifest {
  std::vector<std::string> experiments;
  std::uint64_t seed = 0;
  std::size_t resolution = 201;
  std::optional<std::size_t> samples;
  std::optional<std::string> output;
};

/// Every registered experiment with the default seed and resolution.
RunManifest default_manifest();

/// {"experiments": [...], "seed": 0, "resolution": 201, "samples": n, "output": "..."};
/// every field optional, a missing "experiments" means all of them. Validates the ids.
/// Throws MalformedSpec or UnknownExperimentId.
RunManifest manifest_from_json(std::string_view text);
std::string manifest_to_json(const RunManifest& manifest);

/// Throws UnknownExperimentId for the first id not in the registry, and ParamOutOfRange
/// for a resolution below 3.
void validate(const RunManifest& manifest);

struct RunReport {
  RunManifest manifest;
  std::vector<ExperimentReport> experiments;
  double runtime_seconds = 0.0;
};

/// Validates the whole manifest before running anything.
RunReport run_manifest(const RunManifest& manifest);

/// kExitViolation if any bound was violated, else kExitTargetMissed if any check failed, else kExitOk.
int exit_code(const RunReport& report);

/// Versioned JSON report. Runtimes are only emitted when `include_runtime` is set, so
/// reports without them are byte-identical across runs.
std::string report_to_json(const RunReport& report, bool include_runtime = true);

/// Fixed-width table, values rounded to 6 significant digits.
std::string summary_table(const RunReport& report);

/// "n,re,im" header then one row per coefficient, 17 significant digits.
std::string coeffs_csv(const TaylorSeries& f);
std::string coeffs_json(const TaylorSeries& f);

std::string toeplitz_csv(const ToeplitzResult& r);
std::string toeplitz_json(const ToeplitzResult& r);

std::string region_json(const RegionHull& hull, std::size_t samples);

std::string lemma_sweep_json(const std::vector<LemmaSweep>& sweeps, std::size_t samples, std::uint64_t seed);
std::string lemma_sweep_csv(const std::vector<LemmaSweep>& sweeps);

/// 17 significant digits.
std::string format_double(double x);

/// Writes to a temporary sibling file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace univalent
