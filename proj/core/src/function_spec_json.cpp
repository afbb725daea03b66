#include "function_spec_json.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "univalent/error.hpp"
#include "univalent/serialization.hpp"

namespace univalent {

namespace detail {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

ojson herglotz_json(const HerglotzAtoms& h) {
  ojson out = ojson::array();
  for (const auto& a : h.atoms()) out.push_back({a.weight, a.angle});
  return out;
}

ojson robertson_json(const RobertsonMeasure& m) {
  ojson out = ojson::array();
  for (const auto& a : m.atoms()) out.push_back({a.weight, a.t});
  return out;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedSpec, what); }

std::vector<std::pair<double, double>> atom_pairs(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing \"") + key + "\"");
  if (!it->is_array() || it->empty()) malformed(std::string("\"") + key + "\" must be a non-empty array");
  std::vector<std::pair<double, double>> out;
  for (const auto& atom : *it) {
    if (!atom.is_array() || atom.size() != 2 || !atom[0].is_number() || !atom[1].is_number()) {
      malformed(std::string("\"") + key + "\" entries must be [weight, position] pairs");
    }
    out.emplace_back(atom[0].get<double>(), atom[1].get<double>());
  }
  return out;
}

HerglotzAtoms herglotz_from(const json& j, const char* key) {
  std::vector<HerglotzAtom> atoms;
  for (const auto& [w, angle] : atom_pairs(j, key)) atoms.push_back({w, angle});
  return HerglotzAtoms(std::move(atoms));
}

double number_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing \"") + key + "\"");
  if (!it->is_number()) malformed(std::string("\"") + key + "\" must be a number");
  return it->get<double>();
}

void only_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; });
    if (!known) malformed("unexpected field \"" + key + "\"");
  }
}

}  // namespace

ojson spec_to_json(const FunctionSpec& spec) {
  ojson j;
  j["variant"] = std::string(variant_name(spec));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NamedFunction>) {
          j["named_id"] = s.id;
          if (s.id == "koebe_rotation") j["theta"] = s.theta;
        } else if constexpr (std::is_same_v<T, CloseToConvexSpec>) {
          j["atoms"] = herglotz_json(s.p);
          j["alpha"] = s.alpha;
          j["generator_atoms"] = herglotz_json(s.generator);
        } else if constexpr (std::is_same_v<T, TypicallyRealSpec>) {
          j["atoms"] = robertson_json(s.measure);
        } else {
          j["atoms"] = herglotz_json(s.p);
        }
      },
      spec);
  return j;
}

FunctionSpec spec_from_json(const json& j) {
  if (!j.is_object()) malformed("spec must be a JSON object");
  const auto v = j.find("variant");
  if (v == j.end() || !v->is_string()) malformed("missing string field \"variant\"");
  const auto variant = v->get<std::string>();

  if (variant == "named") {
    only_keys(j, {"variant", "named_id", "theta"});
    const auto id = j.find("named_id");
    if (id == j.end() || !id->is_string()) malformed("named spec needs a string \"named_id\"");
    const auto& ids = named_function_ids();
    const auto name = id->get<std::string>();
    if (std::find(ids.begin(), ids.end(), name) == ids.end()) {
      throw Error(ErrorCode::UnknownFunctionId, "'" + name + "'");
    }
    const double theta = j.contains("theta") ? number_field(j, "theta") : 0.0;
    return NamedFunction{name, theta};
  }
  if (variant == "starlike" || variant == "convex" || variant == "bounded_turning") {
    only_keys(j, {"variant", "atoms"});
    auto p = herglotz_from(j, "atoms");
    if (variant == "starlike") return StarlikeSpec{std::move(p)};
    if (variant == "convex") return ConvexSpec{std::move(p)};
    return BoundedTurningSpec{std::move(p)};
  }
  if (variant == "close_to_convex") {
    only_keys(j, {"variant", "atoms", "alpha", "generator_atoms"});
    if (!j.contains("generator_atoms")) throw Error(ErrorCode::MissingGenerator, "close_to_convex needs \"generator_atoms\"");
    const double alpha = j.contains("alpha") ? number_field(j, "alpha") : 0.0;
    if (!(std::abs(alpha) < std::numbers::pi / 2)) {
      throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " not in (-pi/2, pi/2)");
    }
    return CloseToConvexSpec{herglotz_from(j, "generator_atoms"), alpha, herglotz_from(j, "atoms")};
  }
  if (variant == "typically_real") {
    only_keys(j, {"variant", "atoms"});
    std::vector<RobertsonAtom> atoms;
    for (const auto& [w, t] : atom_pairs(j, "atoms")) atoms.push_back({w, t});
    return TypicallyRealSpec{RobertsonMeasure(std::move(atoms))};
  }
  malformed("unknown variant \"" + variant + "\"");
}

}  // namespace detail

std::string_view variant_name(const FunctionSpec& spec) noexcept {
  static constexpr std::string_view names[] = {"named",           "starlike",        "convex",
                                               "bounded_turning", "close_to_convex", "typically_real"};
  return names[spec.index()];
}

std::string to_json(const FunctionSpec& spec, int indent) { return detail::spec_to_json(spec).dump(indent); }

FunctionSpec function_spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedSpec, e.what());
  }
  return detail::spec_from_json(j);
}

}  // namespace univalent
