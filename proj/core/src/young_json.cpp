#include "orlicz/young_json.hpp"

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

double number_field(const nlohmann::json& desc, const char* key) {
  const auto it = desc.find(key);
  if (it == desc.end()) throw ParseError(std::string("missing field \"") + key + "\"", 0, 0);
  if (!it->is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number", 0, 0);
  return it->get<double>();
}

const nlohmann::json& object_field(const nlohmann::json& desc, const char* key) {
  const auto it = desc.find(key);
  if (it == desc.end()) throw ParseError(std::string("missing field \"") + key + "\"", 0, 0);
  if (!it->is_object()) throw ParseError(std::string("field \"") + key + "\" must be an object", 0, 0);
  return *it;
}

}  // namespace

YoungFunction parse_young(const nlohmann::json& desc) {
  if (!desc.is_object()) throw ParseError("Young function description must be an object", 0, 0);
  const auto kind_it = desc.find("kind");
  if (kind_it == desc.end() || !kind_it->is_string()) {
    throw ParseError("missing string field \"kind\"", 0, 0);
  }
  const std::string kind = kind_it->get<std::string>();
  try {
    if (kind == "power") return power_law(number_field(desc, "p"));
    if (kind == "power_log") return power_log();
    if (kind == "exp_minus_one") return exp_minus_one();
    if (kind == "deadzone") return deadzone();
    if (kind == "capped") return capped(number_field(desc, "b"));
    if (kind == "conjugate") return conjugate(parse_young(object_field(desc, "base")));
    if (kind == "phi_theta") {
      return phi_theta(parse_young(object_field(desc, "base")), number_field(desc, "theta"));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0, 0);
  }
  throw ParseError("unknown Young function kind \"" + kind + "\"", 0, 0);
}

std::vector<CatalogEntry> default_catalog() {
  return {
      {"power2", power_law(2.0)},
      {"power_log", power_log()},
      {"exp_minus_one", exp_minus_one()},
      {"deadzone", deadzone()},
      {"capped1", capped(1.0)},
      {"conj_power3", conjugate(power_law(3.0))},
      {"theta_power2", phi_theta(power_law(2.0), 0.75)},
  };
}

}  // namespace orlicz
