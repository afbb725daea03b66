#include "univalent/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "function_spec_json.hpp"
#include "univalent/error.hpp"

namespace univalent {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

ojson optional_number(const std::optional<double>& x) { return x ? ojson(*x) : ojson(nullptr); }

ojson optional_spec(const std::optional<FunctionSpec>& spec) {
  return spec ? detail::spec_to_json(*spec) : ojson(nullptr);
}

ojson named_point(const SearchDomain& domain, const std::vector<double>& x) {
  if (domain.dims.size() != x.size() || x.empty()) return ojson(nullptr);
  ojson out = ojson::object();
  for (std::size_t i = 0; i < x.size(); ++i) out[domain.dims[i].name] = x[i];
  return out;
}

ojson check_json(const CheckResult& c) {
  ojson j;
  j["objective"] = c.objective;
  j["sense"] = std::string(to_string(c.sense));
  j["kind"] = std::string(to_string(c.kind));
  j["search_space"] = c.search_space;
  j["best_value"] = c.best_value;
  j["target"] = c.target;
  j["deviation"] = c.deviation;
  j["tolerance"] = c.tolerance;
  j["argmax"] = named_point(c.domain, c.argmax);
  j["witness"] = optional_spec(c.witness);
  j["reference"] = c.reference;
  j["reference_spec"] = optional_spec(c.reference_spec);
  j["reference_value"] = c.reference_value;
  j["bound"] = optional_number(c.bound);
  j["lower_bound"] = optional_number(c.lower_bound);
  j["violations"] = c.violations;
  j["tie_count"] = c.tie_count;
  auto& ties = j["ties"] = ojson::array();
  for (const auto& t : c.ties) ties.push_back(named_point(c.domain, t));
  j["evaluations"] = c.evaluations;
  j["note"] = c.note;
  j["passed"] = c.passed;
  return j;
}

ojson manifest_json(const RunManifest& m) {
  ojson j;
  j["experiments"] = m.experiments;
  j["seed"] = m.seed;
  j["resolution"] = m.resolution;
  j["samples"] = m.samples ? ojson(*m.samples) : ojson(nullptr);
  j["output"] = m.output ? ojson(*m.output) : ojson(nullptr);
  return j;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedSpec, what); }

std::string rounded(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

}  // namespace

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

RunManifest default_manifest() {
  RunManifest m;
  for (const auto& e : experiment_registry()) m.experiments.push_back(e.id);
  return m;
}

void validate(const RunManifest& manifest) {
  for (const auto& id : manifest.experiments) {
    if (!is_registered_experiment(id)) throw Error(ErrorCode::UnknownExperimentId, "'" + id + "'");
  }
  if (manifest.resolution < 3) throw Error(ErrorCode::ParamOutOfRange, "resolution must be >= 3");
}

RunManifest manifest_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("manifest must be a JSON object");
  RunManifest m = default_manifest();
  for (const auto& [key, value] : j.items()) {
    if (key == "experiments") {
      if (!value.is_array()) malformed("\"experiments\" must be an array of ids");
      m.experiments.clear();
      for (const auto& id : value) {
        if (!id.is_string()) malformed("experiment ids must be strings");
        m.experiments.push_back(id.get<std::string>());
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) malformed("\"seed\" must be a non-negative integer");
      m.seed = value.get<std::uint64_t>();
    } else if (key == "resolution") {
      if (!value.is_number_unsigned()) malformed("\"resolution\" must be a positive integer");
      m.resolution = value.get<std::size_t>();
    } else if (key == "samples") {
      if (value.is_null()) continue;
      if (!value.is_number_unsigned()) malformed("\"samples\" must be a non-negative integer");
      m.samples = value.get<std::size_t>();
    } else if (key == "output") {
      if (value.is_null()) continue;
      if (!value.is_string()) malformed("\"output\" must be a path string");
      m.output = value.get<std::string>();
    } else {
      malformed("unexpected manifest field \"" + key + "\"");
    }
  }
  validate(m);
  return m;
}

std::string manifest_to_json(const RunManifest& manifest) { return manifest_json(manifest).dump(2); }

RunReport run_manifest(const RunManifest& manifest) {
  validate(manifest);
  const auto started = std::chrono::steady_clock::now();
  RunReport report;
  report.manifest = manifest;
  ExperimentConfig config;
  config.seed = manifest.seed;
  config.resolution = manifest.resolution;
  config.samples = manifest.samples;
  for (const auto& id : manifest.experiments) report.experiments.push_back(extremal_experiment(id, config));
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

int exit_code(const RunReport& report) {
  bool failed = false;
  for (const auto& e : report.experiments) {
    if (e.violations() > 0) return kExitViolation;
    failed = failed || !e.passed();
  }
  return failed ? kExitTargetMissed : kExitOk;
}

std::string report_to_json(const RunReport& report, bool include_runtime) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["manifest"] = manifest_json(report.manifest);
  std::size_t passed = 0, violations = 0;
  auto& experiments = j["experiments"] = ojson::array();
  for (const auto& e : report.experiments) {
    ojson ej;
    ej["id"] = e.id;
    ej["title"] = e.title;
    ej["class"] = e.class_label;
    ej["lower_bound_demo"] = e.lower_bound_demo;
    ej["passed"] = e.passed();
    ej["violations"] = e.violations();
    ej["samples_used"] = e.samples_used;
    auto& checks = ej["checks"] = ojson::array();
    for (const auto& c : e.checks) checks.push_back(check_json(c));
    if (include_runtime) ej["runtime_seconds"] = e.runtime_seconds;
    experiments.push_back(std::move(ej));
    passed += e.passed() ? 1 : 0;
    violations += e.violations();
  }
  ojson summary;
  summary["experiments"] = report.experiments.size();
  summary["passed"] = passed;
  summary["failed"] = report.experiments.size() - passed;
  summary["violations"] = violations;
  summary["exit_code"] = exit_code(report);
  j["summary"] = summary;
  if (include_runtime) j["runtime_seconds"] = report.runtime_seconds;
  return j.dump(2) + "\n";
}

std::string summary_table(const RunReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "id" << std::setw(6) << "class" << std::setw(28) << "objective" << std::setw(5)
     << "sense" << std::right << std::setw(14) << "best" << std::setw(14) << "target" << std::setw(14) << "deviation"
     << std::setw(7) << "viol" << std::setw(6) << "ties" << "  status\n";
  for (const auto& e : report.experiments) {
    for (const auto& c : e.checks) {
      os << std::left << std::setw(5) << e.id << std::setw(6) << e.class_label << std::setw(28) << c.objective
         << std::setw(5) << to_string(c.sense) << std::right << std::setw(14) << rounded(c.best_value) << std::setw(14)
         << rounded(c.target) << std::setw(14) << rounded(c.deviation) << std::setw(7) << c.violations << std::setw(6)
         << c.tie_count << "  " << (c.passed ? "PASS" : "FAIL") << (e.lower_bound_demo ? " (lower bound)" : "")
         << "\n";
    }
  }
  std::size_t passed = 0;
  for (const auto& e : report.experiments) passed += e.passed() ? 1 : 0;
  os << passed << "/" << report.experiments.size() << " experiments passed\n";
  return os.str();
}

std::string coeffs_csv(const TaylorSeries& f) {
  std::string out = "n,re,im\n";
  for (std::size_t n = 1; n <= f.order(); ++n) {
    const auto a = f.a(n);
    out += std::to_string(n) + "," + format_double(a.real()) + "," + format_double(a.imag()) + "\n";
  }
  return out;
}

std::string coeffs_json(const TaylorSeries& f) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["order"] = f.order();
  auto& rows = j["coefficients"] = ojson::array();
  for (std::size_t n = 1; n <= f.order(); ++n) {
    const auto a = f.a(n);
    rows.push_back({{"n", n}, {"re", a.real()}, {"im", a.imag()}});
  }
  return j.dump(2) + "\n";
}

std::string toeplitz_csv(const ToeplitzResult& r) {
  return "n,q,re,im,abs\n" + std::to_string(r.n) + "," + std::to_string(r.q) + "," + format_double(r.value.real()) +
         "," + format_double(r.value.imag()) + "," + format_double(r.abs_value) + "\n";
}

std::string toeplitz_json(const ToeplitzResult& r) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["q"] = r.q;
  j["re"] = r.value.real();
  j["im"] = r.value.imag();
  j["abs"] = r.abs_value;
  return j.dump(2) + "\n";
}

std::string region_json(const RegionHull& hull, std::size_t samples) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = hull.n;
  j["m"] = hull.m;
  j["samples"] = samples;
  j["chord_error"] = hull.chord_error;
  auto& verts = j["vertices"] = ojson::array();
  for (const auto& p : hull.vertices) verts.push_back({p.x, p.y});
  return j.dump(2) + "\n";
}

std::string lemma_sweep_json(const std::vector<LemmaSweep>& sweeps, std::size_t samples, std::uint64_t seed) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["samples"] = samples;
  j["seed"] = seed;
  j["tolerance"] = kOracleTolerance;
  auto& lemmas = j["lemmas"] = ojson::array();
  std::size_t violations = 0;
  for (const auto& s : sweeps) {
    ojson l;
    l["lemma"] = s.lemma;
    l["samples"] = s.samples;
    l["violations"] = s.violations;
    l["min_slack"] = s.min_slack;
    l["tightest_witness"] = optional_spec(s.tightest_witness);
    lemmas.push_back(std::move(l));
    violations += s.violations;
  }
  j["violations"] = violations;
  return j.dump(2) + "\n";
}

std::string lemma_sweep_csv(const std::vector<LemmaSweep>& sweeps) {
  std::string out = "lemma,samples,violations,min_slack\n";
  for (const auto& s : sweeps) {
    out += s.lemma + "," + std::to_string(s.samples) + "," + std::to_string(s.violations) + "," +
           format_double(s.min_slack) + "\n";
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace univalent
