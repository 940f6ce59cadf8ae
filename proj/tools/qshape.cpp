// qshape: spectra, deformation tables, ladder-algebra verification and
// coordinate-space oracle runs for shape-invariant potentials.
//
// Exit codes: 0 success, 1 a verification / oracle check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qshape/algebra.hpp"
#include "qshape/config.hpp"
#include "qshape/errors.hpp"
#include "qshape/format.hpp"
#include "qshape/oracle.hpp"
#include "qshape/spectra.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr double kOracleRelTolerance = 1e-4;

struct Flags {
  std::string config;
  std::string model;
  std::string variant;
  std::string format;
  std::string out;
  std::vector<double> q_list;
  double q = 0.0;
  int n = 0;
  int N = 0;
  int levels = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Run configuration JSON (flags override its fields)");
  cmd->add_option("--model", f.model, "Model JSON {\"kind\": ..., \"params\": {...}}");
  cmd->add_option("--q", f.q, "Deformation parameter q > 0");
  cmd->add_option("--q-list", f.q_list, "Comma-separated q values")->delimiter(',');
  cmd->add_option("--variant", f.variant, "standard|arikcoon|dmodel|smodel");
  cmd->add_option("--n", f.n, "Highest level n of the spectrum table");
  cmd->add_option("--N", f.N, "Matrix size for algebra verification");
  cmd->add_option("--levels", f.levels, "Number of oracle levels");
  cmd->add_option("--format", f.format, "csv|json");
  cmd->add_option("--out", f.out, "Write output to this path instead of stdout");
}

qshape::RunConfig resolve(const CLI::App* cmd, const Flags& f) {
  qshape::RunConfig cfg;
  if (cmd->count("--config")) cfg = qshape::RunConfig::load(f.config);
  if (cmd->count("--model")) {
    cfg.model_path = f.model;
    cfg.model.reset();
  }
  if (cmd->count("--q")) cfg.q = f.q;
  if (cmd->count("--q-list")) cfg.q_list = f.q_list;
  if (cmd->count("--variant")) cfg.variant = qshape::parse_variant(f.variant);
  if (cmd->count("--n")) cfg.n_max = f.n;
  if (cmd->count("--N")) cfg.N = f.N;
  if (cmd->count("--levels")) cfg.levels = f.levels;
  if (cmd->count("--format")) cfg.output = qshape::parse_format(f.format);
  if (cmd->count("--out")) cfg.out_path = f.out;
  return cfg;
}

double residual_tolerance() {
  const char* env = std::getenv("QSHAPE_TOL");
  if (env == nullptr || *env == '\0') return qshape::kDefaultResidualTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw qshape::ConfigError(std::string("QSHAPE_TOL must be a positive number, got '") + env + "'");
  }
  return tol;
}

void emit(const qshape::RunConfig& cfg, const std::string& text) {
  if (cfg.out_path) {
    std::ofstream out(*cfg.out_path, std::ios::binary);
    if (!out) throw qshape::ConfigError("cannot write '" + *cfg.out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
}

int cmd_spectrum(const qshape::RunConfig& cfg) {
  const auto model = cfg.resolve_model();
  const auto table = qshape::build_spectrum_table(model, cfg.resolve_scheme(), cfg.n_max);
  std::ostringstream os;
  if (cfg.output == qshape::OutputFormat::Json) {
    qshape::write_json(os, table);
  } else {
    qshape::write_csv(os, table);
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_verify(const qshape::RunConfig& cfg) {
  const auto model = cfg.resolve_model();
  const double tol = residual_tolerance();
  const auto q_list = cfg.resolve_q_list();
  const auto reports = qshape::verify_batch(model, q_list, cfg.N, tol);
  std::ostringstream os;
  qshape::write_json(os, reports);
  emit(cfg, os.str());
  for (const auto& r : reports)
    if (!r.pass) return kExitFail;
  return 0;
}

int cmd_oracle(const qshape::RunConfig& cfg) {
  const auto model = cfg.resolve_model();
  const auto result = qshape::compare(model, qshape::default_grid(model), cfg.levels);
  std::ostringstream os;
  if (cfg.output == qshape::OutputFormat::Json) {
    qshape::write_json(os, result);
  } else {
    qshape::write_csv(os, result);
  }
  emit(cfg, os.str());
  for (const auto& row : result.rows)
    if (!(row.rel_diff <= kOracleRelTolerance)) return kExitFail;
  return 0;
}

std::string ansatz_note(const qshape::PotentialModel& m) {
  using qshape::PotentialKind;
  switch (m.kind()) {
    case PotentialKind::HarmonicOscillator:
      return "C = 1, f(a_j) = -j; R(a_j) = 1 for every j (unit remainder)";
    case PotentialKind::Morse:
    case PotentialKind::Scarf:
      return "C = 1, f(a_j) = a_j^2";
    case PotentialKind::Coulomb:
      return "C = 1, f(a_j) = 1/(a_j+1)^2, so f(L) = 1/(L+1)^2";
  }
  return "";
}

int cmd_info(const qshape::RunConfig& cfg) {
  const auto model = cfg.resolve_model();
  std::ostringstream os;
  os << "kind: " << qshape::to_string(model.kind()) << '\n';
  os << "model: " << model.label() << '\n';
  os << "hbar_omega: " << qshape::fmt_real(model.hbar_omega()) << '\n';
  os << "bound_state_count: " << model.bound_state_count() << '\n';
  os << "ansatz: " << ansatz_note(model) << '\n';
  os << "j,a_j,R(a_j)\n";
  const int first = std::max(1, model.min_index());
  const int last = std::min(first + 4, model.bound_state_count());
  for (int j = first; j <= last; ++j) {
    os << j << ',' << qshape::fmt_real(model.param_at(j)) << ',' << qshape::fmt_real(model.remainder(j))
       << '\n';
  }
  emit(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and ladder-algebra checks for shape-invariant potentials and their q-deformations"};
  app.require_subcommand(1);

  Flags flags;
  auto* spectrum = app.add_subcommand("spectrum", "Undeformed and deformed spectrum table");
  auto* verify = app.add_subcommand("verify", "Verify every ladder-operator relation (JSON report)");
  auto* oracle = app.add_subcommand("oracle", "Compare the algebraic spectrum with a finite-difference H1");
  auto* info = app.add_subcommand("info", "Summarise a model");
  for (auto* cmd : {spectrum, verify, oracle, info}) add_common(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*spectrum) return cmd_spectrum(resolve(spectrum, flags));
    if (*verify) return cmd_verify(resolve(verify, flags));
    if (*oracle) return cmd_oracle(resolve(oracle, flags));
    if (*info) return cmd_info(resolve(info, flags));
  } catch (const std::exception& e) {
    // every library error here is an input the run should not have accepted
    std::cerr << "qshape: error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
