#include "qshape/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "qshape/errors.hpp"
#include "qshape/format.hpp"

namespace qshape {

namespace {

constexpr double kAnsatzTolerance = 1e-10;

void check_level(const PotentialModel& model, int n) {
  if (n < 0 || n > model.bound_state_count()) {
    throw RangeError("level " + std::to_string(n) + " outside bound window [0, " +
                     std::to_string(model.bound_state_count()) + "] of " + model.label());
  }
}

void check_ansatz(const PotentialModel& model) {
  const double residual = validate_ansatz(model, model.bound_state_count());
  if (!(residual < kAnsatzTolerance)) {
    throw ConfigError(model.label() + " does not satisfy R = C (f_j - f_{j+1}); residual " +
                      std::to_string(residual));
  }
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Standard:
      return "standard";
    case Variant::ArikCoonQ:
      return "arikcoon";
    case Variant::DModel:
      return "dmodel";
    case Variant::SModel:
      return "smodel";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "standard") return Variant::Standard;
  if (key == "arikcoon" || key == "arikcoonq" || key == "qmodel" || key == "cmodel") {
    return Variant::ArikCoonQ;
  }
  if (key == "dmodel") return Variant::DModel;
  if (key == "smodel") return Variant::SModel;
  throw ConfigError("unknown deformation variant '" + std::string(name) + "'");
}

double deformed_energy(const PotentialModel& model, const DeformationScheme& scheme, int n) {
  check_level(model, n);
  const QParam q = scheme.q;
  const double e = model.energy(n);
  switch (scheme.variant) {
    case Variant::Standard:
      return q_bracket(e, q);
    case Variant::ArikCoonQ:
      return Q_bracket(e, q.value() * q.value());
    case Variant::DModel:
      if (n == 0) return 0.0;
      return q.pow(e - model.remainder(n)) * q_bracket(e, q);
    case Variant::SModel:
      return s_model_energy_closed(model, q, n);
  }
  return 0.0;
}

double functional_F(const PotentialModel& model, QParam q) {
  return functional_F_shifted(model, q, 0);
}

double functional_F_shifted(const PotentialModel& model, QParam q, int k) {
  check_ansatz(model);
  return q.pow(-model.ansatz_C() * model.ansatz_f(k));
}

double g_sequence(const PotentialModel& model, QParam q, int k) {
  check_level(model, k);
  const double r = model.remainder(k);
  return q.pow(-2.0 * model.ansatz_C() * model.ansatz_f(k)) * q.pow(r) * q_bracket(r, q);
}

double s_model_energy_sum(const PotentialModel& model, QParam q, int n) {
  check_level(model, n);
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += g_sequence(model, q, k);
  }
  return sum;
}

double s_model_energy_closed(const PotentialModel& model, QParam q, int n) {
  check_level(model, n);
  const double F = functional_F(model, q);
  const double e = model.energy(n);
  return q.pow(2.0 * model.remainder(0)) * F * F * q.pow(e) * q_bracket(e, q);
}

SpectrumTable build_spectrum_table(const PotentialModel& model,
                                   const std::optional<DeformationScheme>& scheme, int n_max) {
  const std::vector<double> e = model.energy_ladder(n_max);
  SpectrumTable table;
  table.rows.reserve(e.size());
  for (int n = 0; n <= n_max; ++n) {
    SpectrumRow row;
    row.n = n;
    row.e_n = e[n];
    if (scheme) {
      row.E_deformed = deformed_energy(model, *scheme, n);
      if (scheme->variant == Variant::SModel && n >= 1) {
        row.G_n = g_sequence(model, scheme->q, n);
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

void write_csv(std::ostream& os, const SpectrumTable& table) {
  os << "n,e_n,E_deformed,G_n\n";
  for (const auto& row : table.rows) {
    os << row.n << ',' << fmt_real(row.e_n) << ',' << fmt_real(row.E_deformed, "") << ','
       << fmt_real(row.G_n, "") << '\n';
  }
}

void write_json(std::ostream& os, const SpectrumTable& table) {
  os << "[";
  for (size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    os << (i == 0 ? "\n" : ",\n") << "  {\"n\": " << row.n << ", \"e_n\": " << fmt_real(row.e_n)
       << ", \"E_deformed\": " << fmt_real(row.E_deformed, "null")
       << ", \"G_n\": " << fmt_real(row.G_n, "null") << "}";
  }
  os << (table.rows.empty() ? "]\n" : "\n]\n");
}

}  // namespace qshape
