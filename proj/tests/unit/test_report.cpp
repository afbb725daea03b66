#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "univalent/classes.hpp"
#include "univalent/error.hpp"
#include "univalent/report.hpp"

using namespace univalent;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string golden(const std::string& name) { return read_file(std::filesystem::path(UNIVALENT_GOLDEN_DIR) / name); }

RunReport fixed_report() {
  RunReport r;
  r.manifest.experiments = {"E1", "E16"};
  r.runtime_seconds = 1.5;

  ExperimentReport sharp;
  sharp.id = "E1";
  sharp.title = "sharp example";
  sharp.class_label = "S";
  sharp.lower_bound_demo = true;
  CheckResult c;
  c.objective = "|T_2(2)|";
  c.search_space = "rotations";
  c.domain.dims = {{"theta", 0.0, 6.0, true}};
  c.best_value = 13.0;
  c.argmax = {1.5};
  c.witness = NamedFunction{"koebe_rotation", 1.5};
  c.target = 13.0;
  c.tolerance = 1e-6;
  c.reference = "z/(1-iz)^2";
  c.reference_spec = NamedFunction{"starlike_extremal", 0.0};
  c.reference_value = 13.0;
  c.tie_count = 2;
  c.ties = {{4.5}};
  c.evaluations = 10;
  c.passed = true;
  sharp.checks.push_back(c);
  sharp.samples_used = 10;
  sharp.runtime_seconds = 0.5;

  ExperimentReport sampled;
  sampled.id = "E16";
  sampled.title = "sampled example";
  sampled.class_label = "T";
  CheckResult s;
  s.objective = "T_2(2)";
  s.sense = Sense::Minimize;
  s.kind = CheckKind::Sampled;
  s.search_space = "measures";
  s.best_value = -9.0;
  s.witness = TypicallyRealSpec{RobertsonMeasure({{0.5, 1.0}, {0.5, -1.0}})};
  s.target = -9.0;
  s.tolerance = 1e-9;
  s.reference = "F(z,1/2,1,-1)";
  s.reference_spec = s.witness;
  s.reference_value = -9.0;
  s.bound = 4.0;
  s.lower_bound = -9.0;
  s.evaluations = 100;
  s.note = "note";
  s.passed = true;
  sampled.checks.push_back(s);
  sampled.samples_used = 100;
  sampled.runtime_seconds = 1.0;

  r.experiments = {sharp, sampled};
  return r;
}

}  // namespace

TEST_CASE("report JSON layout is pinned") {
  const auto report = fixed_report();
  CHECK(report_to_json(report, false) == golden("report_layout.json"));
  CHECK(report_to_json(report, true).find("\"runtime_seconds\": 1.5") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto report = fixed_report();
  CHECK(exit_code(report) == kExitOk);
  report.experiments[1].checks[0].passed = false;
  CHECK(exit_code(report) == kExitTargetMissed);
  report.experiments[1].checks[0].violations = 2;
  CHECK(exit_code(report) == kExitViolation);
  CHECK(exit_code(RunReport{}) == kExitOk);
}

TEST_CASE("summary table rounds to six digits") {
  auto report = fixed_report();
  report.experiments[0].checks[0].best_value = 13.000000123456;
  const auto table = summary_table(report);
  CHECK(table.find(" 13 ") != std::string::npos);
  CHECK(table.find("PASS (lower bound)") != std::string::npos);
  CHECK(table.find("2/2 experiments passed") != std::string::npos);
}

TEST_CASE("manifest parsing validates ids before running") {
  const auto def = default_manifest();
  CHECK(def.experiments.size() == 16);
  CHECK(def.seed == 0);
  CHECK(def.resolution == 201);

  const auto m = manifest_from_json(R"({"experiments": ["E12", "E15"], "seed": 4, "samples": 10})");
  CHECK(m.experiments == std::vector<std::string>{"E12", "E15"});
  CHECK(m.seed == 4);
  CHECK(m.samples == 10u);
  CHECK(manifest_from_json("{}").experiments.size() == 16);
  CHECK(manifest_from_json(R"({"experiments": []})").experiments.empty());

  try {
    static_cast<void>(manifest_from_json(R"({"experiments": ["E1", "E99"]})"));
    FAIL("expected UnknownExperimentId");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownExperimentId);
  }
  CHECK_THROWS_AS(static_cast<void>(manifest_from_json(R"({"seed": -1})")), Error);
  CHECK_THROWS_AS(static_cast<void>(manifest_from_json(R"({"color": 1})")), Error);
  CHECK_THROWS_AS(static_cast<void>(manifest_from_json(R"({"resolution": 2})")), Error);
  CHECK(manifest_from_json(manifest_to_json(m)).experiments == m.experiments);
}

TEST_CASE("empty manifest gives an empty report") {
  RunManifest m;
  const auto r = run_manifest(m);
  CHECK(r.experiments.empty());
  CHECK(exit_code(r) == kExitOk);
  CHECK(report_to_json(r, false).find("\"experiments\": []") != std::string::npos);
}

TEST_CASE("coefficient and determinant tables") {
  const auto f = named_function("starlike_extremal", 4);
  CHECK(coeffs_csv(f) == "n,re,im\n1,1,0\n2,0,2\n3,-3,0\n4,0,-4\n");
  const auto third = named_function("log_map", 3);
  CHECK(coeffs_csv(third).find("3,0.33333333333333331,0\n") != std::string::npos);
  CHECK(toeplitz_csv(toeplitz_det(f, 2, 3)) == "n,q,re,im,abs\n2,3,0,-84,84\n");
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("write_atomic replaces the file in one step") {
  const auto dir = std::filesystem::temp_directory_path() / "univalent_report_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_atomic(path, "first");
  write_atomic(path, "second");
  CHECK(read_file(path) == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  std::filesystem::remove_all(dir);
}
