#include "abelsnf/config.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "abelsnf/errors.hpp"

namespace abelsnf {

Limits load_limits(const std::string& path, Limits base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw InputError("config file must hold a JSON object");
  auto read = [&](const char* key, auto& field) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_unsigned()) throw InputError(std::string("config key '") + key + "' must be a positive integer");
    field = j[key].get<std::remove_reference_t<decltype(field)>>();
  };
  read("dense", base.dense);
  read("spectrum", base.spectrum);
  read("snf", base.snf);
  read("ncube", base.ncube);
  return base;
}

Limits limits_from_environment() {
  const char* path = std::getenv(kConfigEnvVar);
  if (path == nullptr || *path == '\0') return {};
  return load_limits(path);
}

}  // namespace abelsnf
