#include "qshape/config.hpp"

#include <fstream>
#include <sstream>

#include "qshape/errors.hpp"

namespace qshape {

namespace {

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open '" + path + "'");
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

double as_real(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number()) {
    throw ConfigError("'" + what + "' must be a number");
  }
  return v.get<double>();
}

int as_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer()) {
    throw ConfigError("'" + what + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

PotentialModel model_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw ConfigError("model document needs a string field \"kind\"");
  }
  ParamMap params;
  if (doc.contains("params")) {
    const auto& p = doc["params"];
    if (!p.is_object()) {
      throw ConfigError("model field \"params\" must be an object");
    }
    for (const auto& [key, value] : p.items()) params[key] = as_real(value, key);
  }
  int cap = kDefaultLadderCap;
  if (doc.contains("cap")) cap = as_int(doc["cap"], "cap");
  return PotentialModel::make(parse_potential_kind(doc["kind"].get<std::string>()), params, cap);
}

PotentialModel load_model(const std::string& path) { return model_from_json(read_json_file(path)); }

DeformationScheme scheme_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("scheme must be an object");
  }
  DeformationScheme scheme;
  if (doc.contains("variant")) {
    if (!doc["variant"].is_string()) throw ConfigError("'variant' must be a string");
    scheme.variant = parse_variant(doc["variant"].get<std::string>());
  }
  if (doc.contains("q")) {
    try {
      scheme.q = QParam(as_real(doc["q"], "q"));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  return scheme;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

RunConfig RunConfig::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("run configuration must be a JSON object");
  }
  RunConfig cfg;
  if (doc.contains("model")) {
    if (doc["model"].is_string()) {
      cfg.model_path = doc["model"].get<std::string>();
    } else {
      cfg.model = doc["model"];
    }
  }
  if (doc.contains("scheme")) {
    const DeformationScheme s = scheme_from_json(doc["scheme"]);
    if (doc["scheme"].contains("variant")) cfg.variant = s.variant;
    if (doc["scheme"].contains("q")) cfg.q = s.q.value();
  }
  if (doc.contains("n_max")) cfg.n_max = as_int(doc["n_max"], "n_max");
  if (doc.contains("N")) cfg.N = as_int(doc["N"], "N");
  if (doc.contains("levels")) cfg.levels = as_int(doc["levels"], "levels");
  if (doc.contains("q_list")) {
    if (!doc["q_list"].is_array()) throw ConfigError("'q_list' must be an array");
    for (const auto& v : doc["q_list"]) cfg.q_list.push_back(as_real(v, "q_list"));
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw ConfigError("'output' must be a string");
    cfg.output = parse_format(doc["output"].get<std::string>());
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) { return from_json(read_json_file(path)); }

PotentialModel RunConfig::resolve_model() const {
  if (model_path) return load_model(*model_path);
  if (model) return model_from_json(*model);
  throw ConfigError("no model given (use --model <path> or a config with \"model\")");
}

std::optional<DeformationScheme> RunConfig::resolve_scheme() const {
  if (!variant && !q) return std::nullopt;
  DeformationScheme scheme;
  if (variant) scheme.variant = *variant;
  if (q) {
    try {
      scheme.q = QParam(*q);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  return scheme;
}

std::vector<double> RunConfig::resolve_q_list() const {
  if (!q_list.empty()) return q_list;
  if (q) return {*q};
  return {0.8, 1.1, 1.5};
}

}  // namespace qshape
