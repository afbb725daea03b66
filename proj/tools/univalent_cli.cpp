// univalent: coefficient tables, Toeplitz determinants, extremal experiments,
// typically real coefficient regions and lemma oracle sweeps.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "univalent/classes.hpp"
#include "univalent/determinants.hpp"
#include "univalent/error.hpp"
#include "univalent/lemma_oracles.hpp"
#include "univalent/measures.hpp"
#include "univalent/report.hpp"
#include "univalent/sampling.hpp"
#include "univalent/serialization.hpp"
#include "univalent/typically_real.hpp"

namespace {

using namespace univalent;

struct SpecInput {
  std::string inline_json;
  std::string file;
};

void add_spec_options(CLI::App* cmd, SpecInput& in) {
  auto* a = cmd->add_option("--spec", in.inline_json, "FunctionSpec as inline JSON");
  auto* b = cmd->add_option("--spec-file", in.file, "FunctionSpec JSON file")->check(CLI::ExistingFile);
  a->excludes(b);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedSpec, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FunctionSpec load_spec(const SpecInput& in) {
  if (!in.file.empty()) return function_spec_from_json(read_file(in.file));
  if (in.inline_json.empty()) throw Error(ErrorCode::MalformedSpec, "one of --spec or --spec-file is required");
  return function_spec_from_json(in.inline_json);
}

void emit(const std::string& content, const std::string& out) {
  if (out.empty()) {
    std::cout << content;
  } else {
    write_atomic(out, content);
  }
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz determinant experiments for univalent function classes"};
  app.require_subcommand(1);

  SpecInput spec_in;
  std::string out, format;
  std::uint64_t seed = 0;
  std::size_t order = 10, n = 1, q = 2, m = 3, resolution = 201, region_samples = 2001, check = 0;
  std::optional<std::size_t> samples;
  std::string manifest_path;
  std::vector<std::string> experiment_ids;

  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients a_1..a_N of a FunctionSpec");
  add_spec_options(coeffs, spec_in);
  coeffs->add_option("-N,--order", order, "Number of coefficients")->check(CLI::PositiveNumber);
  coeffs->add_option("--out", out, "Output file (default stdout)");
  add_format(coeffs, format);

  auto* toeplitz = app.add_subcommand("toeplitz", "Toeplitz determinant T_q(n) of a FunctionSpec");
  add_spec_options(toeplitz, spec_in);
  toeplitz->add_option("-n", n, "Starting coefficient index")->check(CLI::PositiveNumber);
  toeplitz->add_option("-q", q, "Matrix size")->check(CLI::PositiveNumber);
  toeplitz->add_option("--out", out, "Output file (default stdout)");
  add_format(toeplitz, format);

  auto* run = app.add_subcommand("run", "Run registered extremal experiments (default: all, seed 0)");
  run->add_option("manifest", manifest_path, "Run manifest JSON")->check(CLI::ExistingFile);
  run->add_option("-e,--experiments", experiment_ids, "Experiment ids, overriding the manifest")->delimiter(',');
  auto* seed_opt = run->add_option("--seed", seed, "Random seed");
  auto* res_opt = run->add_option("--resolution", resolution, "Grid points per dimension");
  run->add_option("--samples", samples, "Sample budget of sampling experiments");
  run->add_option("--out", out, "Write the JSON report here");
  add_format(run, format);

  auto* region = app.add_subcommand("region", "Convex hull of (a_n, a_m) over typically real functions");
  region->add_option("-n", n, "First coefficient index")->check(CLI::PositiveNumber);
  region->add_option("-m", m, "Second coefficient index")->check(CLI::PositiveNumber);
  region->add_option("--samples", region_samples, "Curve samples on [-1, 1]");
  region->add_option("--check", check, "Re-check containment of this many random measures");
  region->add_option("--seed", seed, "Seed for --check");
  region->add_option("--out", out, "Output path prefix; writes <out>.csv and <out>.json");
  add_format(region, format);

  auto* lemmas = app.add_subcommand("verify-lemmas", "Sweep every lemma oracle over random class members");
  std::size_t lemma_samples = 10'000;
  lemmas->add_option("--samples", lemma_samples, "Samples per oracle");
  lemmas->add_option("--seed", seed, "Random seed");
  lemmas->add_option("--out", out, "Output file (default stdout)");
  add_format(lemmas, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*coeffs) {
      const auto f = build(load_spec(spec_in), order);
      emit(format == "json" ? coeffs_json(f) : coeffs_csv(f), out);
      return kExitOk;
    }
    if (*toeplitz) {
      const auto f = build(load_spec(spec_in), n + q - 1);
      const auto r = toeplitz_det(f, n, q);
      emit(format == "csv" ? toeplitz_csv(r) : toeplitz_json(r), out);
      return kExitOk;
    }
    if (*run) {
      RunManifest manifest = manifest_path.empty() ? default_manifest() : manifest_from_json(read_file(manifest_path));
      if (!experiment_ids.empty()) manifest.experiments = experiment_ids;
      if (*seed_opt) manifest.seed = seed;
      if (*res_opt) manifest.resolution = resolution;
      if (samples) manifest.samples = samples;
      if (!out.empty()) manifest.output = out;
      validate(manifest);
      const auto report = run_manifest(manifest);
      const auto json = report_to_json(report);
      if (manifest.output) write_atomic(*manifest.output, json);
      if (format == "json" && !manifest.output) {
        std::cout << json;
      } else {
        std::cout << summary_table(report);
      }
      return exit_code(report);
    }
    if (*region) {
      const auto hull = region_hull(n, m, region_samples);
      std::size_t escapes = 0;
      if (check > 0) {
        Rng rng(seed);
        const double tol = 1e-9 + hull.chord_error;
        for (std::size_t i = 0; i < check; ++i) {
          const auto f = typically_real_coeffs(sample_robertson(rng, 4), std::max(n, m));
          if (!hull.contains({f.a(n).real(), f.a(m).real()}, tol)) ++escapes;
        }
        std::cerr << check << " random measures checked, " << escapes << " outside the hull\n";
      }
      if (out.empty()) {
        std::cout << (format == "json" ? region_json(hull, region_samples) : hull.to_csv());
      } else {
        write_atomic(out + ".csv", hull.to_csv());
        write_atomic(out + ".json", region_json(hull, region_samples));
      }
      return escapes > 0 ? kExitViolation : kExitOk;
    }
    if (*lemmas) {
      const auto sweeps = sweep_lemmas(lemma_samples, seed);
      emit(format == "csv" ? lemma_sweep_csv(sweeps) : lemma_sweep_json(sweeps, lemma_samples, seed), out);
      std::size_t violations = 0;
      for (const auto& s : sweeps) violations += s.violations;
      return violations > 0 ? kExitViolation : kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
