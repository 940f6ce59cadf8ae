#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qshape/potential.hpp"
#include "qshape/spectra.hpp"

namespace qshape {

// {"kind": "Morse", "params": {"V0": 50, "lambda": 1, "b": 1}, "cap": 64}
PotentialModel model_from_json(const nlohmann::json& doc);
PotentialModel load_model(const std::string& path);

// {"variant": "smodel", "q": 1.2}
DeformationScheme scheme_from_json(const nlohmann::json& doc);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(const std::string& name);

// One reproducible run. A config file may carry any subset of
//   {"model": {...} | "path.json", "scheme": {...}, "n_max": 5, "N": 8,
//    "levels": 4, "q_list": [0.8, 1.1], "output": "csv"}
// and command-line flags override individual fields.
struct RunConfig {
  std::optional<nlohmann::json> model;  // inline model document
  std::optional<std::string> model_path;
  std::optional<Variant> variant;
  std::optional<double> q;
  std::vector<double> q_list;
  int n_max = 5;
  int N = 8;
  int levels = 4;
  OutputFormat output = OutputFormat::Csv;
  std::optional<std::string> out_path;

  static RunConfig from_json(const nlohmann::json& doc);
  static RunConfig load(const std::string& path);

  PotentialModel resolve_model() const;
  // Scheme when a variant or q was given; variant defaults to standard, q to 1.
  std::optional<DeformationScheme> resolve_scheme() const;
  // q_list, else {q}, else the default verification set {0.8, 1.1, 1.5}.
  std::vector<double> resolve_q_list() const;
};

}  // namespace qshape
