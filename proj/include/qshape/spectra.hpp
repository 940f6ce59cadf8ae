#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qshape/potential.hpp"
#include "qshape/qnum.hpp"

namespace qshape {

// Deformation variants. ArikCoonQ and DModel have no Hamiltonian of their own;
// their "energies" are the diagonal values of the products C+C- and D+D-.
enum class Variant { Standard, ArikCoonQ, DModel, SModel };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

struct DeformationScheme {
  Variant variant = Variant::Standard;
  QParam q{1.0};
};

// Deformed level n in units of hbar_omega.
//   Standard   [e_n]_q
//   ArikCoonQ  [e_n]_{q^2}
//   DModel     q^{-R(a_n)} q^{e_n} [e_n]_q   (0 at n = 0)
//   SModel     q^{2R(a_0)} F^2 q^{e_n} [e_n]_q
double deformed_energy(const PotentialModel& model, const DeformationScheme& scheme, int n);

// Ansatz functional F = q^{-C f(a_0)} and its translates F_k = q^{-C f(a_k)}.
// Throws ConfigError when the model's ansatz residual exceeds 1e-10.
double functional_F(const PotentialModel& model, QParam q);
double functional_F_shifted(const PotentialModel& model, QParam q, int k);

// S-model increment G_k = q^{-2C f(a_k)} q^{R(a_k)} [R(a_k)]_q. k = 0 gives the
// commutator value G_0 of [S-, S+].
double g_sequence(const PotentialModel& model, QParam q, int k);

// Sum of G_1..G_n.
double s_model_energy_sum(const PotentialModel& model, QParam q, int n);

// q^{2R(a_0)} F^2 q^{e_n} [e_n]_q; agrees with s_model_energy_sum.
double s_model_energy_closed(const PotentialModel& model, QParam q, int n);

struct SpectrumRow {
  int n = 0;
  double e_n = 0.0;
  std::optional<double> E_deformed;
  std::optional<double> G_n;
};

struct SpectrumTable {
  std::vector<SpectrumRow> rows;
};

// Rows n = 0..n_max. Without a scheme only e_n is filled; G_n is filled for the
// S-model from n = 1.
SpectrumTable build_spectrum_table(const PotentialModel& model,
                                   const std::optional<DeformationScheme>& scheme, int n_max);

void write_csv(std::ostream& os, const SpectrumTable& table);
void write_json(std::ostream& os, const SpectrumTable& table);

}  // namespace qshape
