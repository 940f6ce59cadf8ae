#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qshape {

enum class PotentialKind { HarmonicOscillator, Morse, Scarf, Coulomb };

std::string_view to_string(PotentialKind kind);
PotentialKind parse_potential_kind(std::string_view name);

using ParamMap = std::map<std::string, double>;

inline constexpr int kDefaultLadderCap = 64;

// A translationally shape-invariant potential in natural units (hbar = m = e = 1).
//
// Ladder index j labels the parameter a_j; H1 carries a_1 and its spectrum is
// hbar_omega * e_n with e_n = R(a_1) + ... + R(a_n). Every model also satisfies
// the ansatz R(a_j) = C [f(a_j) - f(a_{j+1})].
//
// Per kind:
//   HarmonicOscillator {omega}      a_j = j, R = 1, f = -j, W = omega x / sqrt(2)
//   Morse {V0, lambda, b}           a_j = b - lambda/sqrt(2 V0) (j - 1/2), f = a^2
//   Scarf {V0, lambda}              a_j = (sqrt(8 V0/lambda^2 + 1) - 2j + 1) / 2, f = a^2
//   Coulomb {Z, L}                  a_j = L + j - 1 (so a_1 = L), f = 1/(a+1)^2
//
// Immutable after construction.
class PotentialModel {
 public:
  static PotentialModel make(PotentialKind kind, const ParamMap& params,
                             int ladder_cap = kDefaultLadderCap);

  PotentialKind kind() const { return kind_; }
  const ParamMap& raw_params() const { return params_; }
  double param(const std::string& name) const;

  double hbar_omega() const { return hbar_omega_; }
  double ansatz_C() const { return 1.0; }

  // Short label such as "Morse{V0=50,lambda=1,b=1}".
  std::string label() const;

  // Smallest ladder index at which a_j, R(a_j) and f(a_j) are finite.
  // Zero except for the L = 0 Coulomb chain, whose a_0 = -1 is singular.
  int min_index() const;

  // Largest excited-state index n of H1 (Morse/Scarf: a_{n+1} > 0; others: the cap).
  int bound_state_count() const { return bound_state_count_; }

  double param_at(int j) const;
  double remainder(int j) const;
  double ansatz_f(int j) const;

  // e_0 .. e_{n_max}.
  std::vector<double> energy_ladder(int n_max) const;
  double energy(int n) const;

  double superpotential(int j, double x) const;
  double superpotential_derivative(int j, double x) const;

  // V1(x) = W(x; a_1)^2 - W'(x; a_1)/sqrt(2); H1 = -1/2 d^2/dx^2 + V1 has ground energy 0.
  double partner_potential_V1(double x) const;

 private:
  PotentialModel() = default;
  void check_index(int j, int upper) const;

  PotentialKind kind_ = PotentialKind::HarmonicOscillator;
  ParamMap params_;
  double hbar_omega_ = 1.0;
  int bound_state_count_ = 0;
  int ladder_cap_ = kDefaultLadderCap;
};

// max_j |R(a_j) - C (f_j - f_{j+1})| over min_index() <= j <= j_max.
double validate_ansatz(const PotentialModel& model, int j_max);

}  // namespace qshape
