#include "qshape/potential.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "qshape/errors.hpp"

namespace qshape {

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double require(const ParamMap& params, const std::string& name, std::string_view kind) {
  auto it = params.find(name);
  if (it == params.end()) {
    throw ConfigError(std::string(kind) + " model requires parameter '" + name + "'");
  }
  if (!std::isfinite(it->second)) {
    throw ConfigError("parameter '" + name + "' must be finite");
  }
  return it->second;
}

double require_positive(const ParamMap& params, const std::string& name, std::string_view kind) {
  const double v = require(params, name, kind);
  if (!(v > 0.0)) {
    throw ConfigError(std::string(kind) + " parameter '" + name + "' must be > 0, got " +
                      std::to_string(v));
  }
  return v;
}

// Morse/Scarf ladder step in natural units and the parameter at j = 0.
struct LinearChain {
  double a0;
  double step;
};

LinearChain morse_chain(const ParamMap& p) {
  const double step = p.at("lambda") / std::sqrt(2.0 * p.at("V0"));
  return {p.at("b") + 0.5 * step, step};
}

LinearChain scarf_chain(const ParamMap& p) {
  const double lambda = p.at("lambda");
  return {0.5 * (std::sqrt(8.0 * p.at("V0") / (lambda * lambda) + 1.0) + 1.0), 1.0};
}

}  // namespace

std::string_view to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::HarmonicOscillator:
      return "HarmonicOscillator";
    case PotentialKind::Morse:
      return "Morse";
    case PotentialKind::Scarf:
      return "Scarf";
    case PotentialKind::Coulomb:
      return "Coulomb";
  }
  return "unknown";
}

PotentialKind parse_potential_kind(std::string_view name) {
  const std::string key = lower(name);
  if (key == "harmonicoscillator" || key == "ho" || key == "harmonic_oscillator") {
    return PotentialKind::HarmonicOscillator;
  }
  if (key == "morse") return PotentialKind::Morse;
  if (key == "scarf") return PotentialKind::Scarf;
  if (key == "coulomb") return PotentialKind::Coulomb;
  throw ConfigError("unknown potential kind '" + std::string(name) + "'");
}

PotentialModel PotentialModel::make(PotentialKind kind, const ParamMap& params, int ladder_cap) {
  if (ladder_cap < 1) {
    throw ConfigError("ladder cap must be >= 1");
  }
  PotentialModel m;
  m.kind_ = kind;
  m.ladder_cap_ = ladder_cap;
  const std::string_view name = to_string(kind);

  switch (kind) {
    case PotentialKind::HarmonicOscillator: {
      const double omega = require_positive(params, "omega", name);
      m.params_ = {{"omega", omega}};
      m.hbar_omega_ = omega;
      m.bound_state_count_ = ladder_cap;
      break;
    }
    case PotentialKind::Morse: {
      const double V0 = require_positive(params, "V0", name);
      const double lambda = require_positive(params, "lambda", name);
      const double b = require_positive(params, "b", name);
      m.params_ = {{"V0", V0}, {"lambda", lambda}, {"b", b}};
      const LinearChain c = morse_chain(m.params_);
      if (0.5 * c.step >= b) {
        throw ConfigError("Morse potential has no bound state: lambda/sqrt(2 V0)/2 >= b");
      }
      m.hbar_omega_ = V0;
      break;
    }
    case PotentialKind::Scarf: {
      const double V0 = require_positive(params, "V0", name);
      const double lambda = require_positive(params, "lambda", name);
      m.params_ = {{"V0", V0}, {"lambda", lambda}};
      // Gap scale of -V0 sech^2(lambda x) in natural units: E_n - E_0 = (lambda^2/2) e_n.
      m.hbar_omega_ = 0.5 * lambda * lambda;
      break;
    }
    case PotentialKind::Coulomb: {
      const double Z = require_positive(params, "Z", name);
      const double L = require(params, "L", name);
      if (L < 0.0 || L != std::floor(L)) {
        throw ConfigError("Coulomb parameter 'L' must be a non-negative integer");
      }
      m.params_ = {{"Z", Z}, {"L", L}};
      m.hbar_omega_ = 0.5 * Z * Z;
      m.bound_state_count_ = ladder_cap;
      break;
    }
  }

  for (const auto& [key, value] : params) {
    if (!m.params_.count(key)) {
      throw ConfigError("unknown " + std::string(name) + " parameter '" + key + "'");
    }
  }

  if (kind == PotentialKind::Morse || kind == PotentialKind::Scarf) {
    const LinearChain c = kind == PotentialKind::Morse ? morse_chain(m.params_) : scarf_chain(m.params_);
    // a_{n+1} = a0 - step (n+1) > 0; the relative slack absorbs rounding at exact zeros.
    const double slack = 1e-12 * std::max(1.0, std::abs(c.a0));
    int n = 0;
    while (c.a0 - c.step * (n + 2) > slack) ++n;
    m.bound_state_count_ = n;
  }
  return m;
}

double PotentialModel::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) {
    throw ConfigError("model " + std::string(to_string(kind_)) + " has no parameter '" + name + "'");
  }
  return it->second;
}

std::string PotentialModel::label() const {
  std::ostringstream os;
  os << to_string(kind_) << '{';
  bool first = true;
  // fixed order matching the documented parameter lists
  static const std::map<PotentialKind, std::vector<std::string>> order = {
      {PotentialKind::HarmonicOscillator, {"omega"}},
      {PotentialKind::Morse, {"V0", "lambda", "b"}},
      {PotentialKind::Scarf, {"V0", "lambda"}},
      {PotentialKind::Coulomb, {"Z", "L"}}};
  for (const auto& key : order.at(kind_)) {
    if (!first) os << ',';
    os << key << '=' << params_.at(key);
    first = false;
  }
  os << '}';
  return os.str();
}

int PotentialModel::min_index() const {
  if (kind_ == PotentialKind::Coulomb && params_.at("L") == 0.0) return 1;
  return 0;
}

void PotentialModel::check_index(int j, int upper) const {
  if (j < min_index() || j > upper) {
    throw RangeError(std::string(to_string(kind_)) + ": ladder index " + std::to_string(j) +
                     " outside [" + std::to_string(min_index()) + ", " + std::to_string(upper) + "]");
  }
}

double PotentialModel::param_at(int j) const {
  if (j < 0) {
    throw RangeError("ladder index must be >= 0");
  }
  switch (kind_) {
    case PotentialKind::HarmonicOscillator:
      return static_cast<double>(j);
    case PotentialKind::Morse: {
      const double step = params_.at("lambda") / std::sqrt(2.0 * params_.at("V0"));
      return params_.at("b") - step * (j - 0.5);
    }
    case PotentialKind::Scarf: {
      const double lambda = params_.at("lambda");
      return 0.5 * (std::sqrt(8.0 * params_.at("V0") / (lambda * lambda) + 1.0) - 2.0 * j + 1.0);
    }
    case PotentialKind::Coulomb:
      return params_.at("L") + j - 1.0;
  }
  return 0.0;
}

double PotentialModel::remainder(int j) const {
  check_index(j, bound_state_count_);
  switch (kind_) {
    case PotentialKind::HarmonicOscillator:
      return 1.0;
    case PotentialKind::Morse:
    case PotentialKind::Scarf: {
      const double a = param_at(j);
      const double a_next = param_at(j + 1);
      return a * a - a_next * a_next;
    }
    case PotentialKind::Coulomb: {
      const double a = param_at(j);
      return 1.0 / ((a + 1.0) * (a + 1.0)) - 1.0 / ((a + 2.0) * (a + 2.0));
    }
  }
  return 0.0;
}

double PotentialModel::ansatz_f(int j) const {
  if (j < min_index()) {
    throw RangeError("ansatz f undefined at ladder index " + std::to_string(j));
  }
  const double a = param_at(j);
  switch (kind_) {
    case PotentialKind::HarmonicOscillator:
      return -static_cast<double>(j);
    case PotentialKind::Morse:
    case PotentialKind::Scarf:
      return a * a;
    case PotentialKind::Coulomb:
      return 1.0 / ((a + 1.0) * (a + 1.0));
  }
  return 0.0;
}

std::vector<double> PotentialModel::energy_ladder(int n_max) const {
  if (n_max < 0 || n_max > bound_state_count_) {
    throw RangeError(std::string(to_string(kind_)) + ": n_max " + std::to_string(n_max) +
                     " outside bound window [0, " + std::to_string(bound_state_count_) + "]");
  }
  std::vector<double> e(static_cast<size_t>(n_max) + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) {
    e[n] = e[n - 1] + remainder(n);
  }
  return e;
}

double PotentialModel::energy(int n) const {
  return energy_ladder(n).back();
}

double PotentialModel::superpotential(int j, double x) const {
  const double a = param_at(j);
  switch (kind_) {
    case PotentialKind::HarmonicOscillator:
      return params_.at("omega") * x / kSqrt2;
    case PotentialKind::Morse:
      return std::sqrt(params_.at("V0")) * (a - std::exp(-params_.at("lambda") * x));
    case PotentialKind::Scarf: {
      const double lambda = params_.at("lambda");
      return lambda / kSqrt2 * a * std::tanh(lambda * x);
    }
    case PotentialKind::Coulomb: {
      if (!(x > 0.0)) {
        throw DomainError("Coulomb superpotential requires r > 0");
      }
      const double Z = params_.at("Z");
      return Z / kSqrt2 * (1.0 / (a + 1.0) - (a + 1.0) / (Z * x));
    }
  }
  return 0.0;
}

double PotentialModel::superpotential_derivative(int j, double x) const {
  const double a = param_at(j);
  switch (kind_) {
    case PotentialKind::HarmonicOscillator:
      return params_.at("omega") / kSqrt2;
    case PotentialKind::Morse: {
      const double lambda = params_.at("lambda");
      return std::sqrt(params_.at("V0")) * lambda * std::exp(-lambda * x);
    }
    case PotentialKind::Scarf: {
      const double lambda = params_.at("lambda");
      const double sech = 1.0 / std::cosh(lambda * x);
      return lambda * lambda / kSqrt2 * a * sech * sech;
    }
    case PotentialKind::Coulomb:
      if (!(x > 0.0)) {
        throw DomainError("Coulomb superpotential requires r > 0");
      }
      return (a + 1.0) / (kSqrt2 * x * x);
  }
  return 0.0;
}

double PotentialModel::partner_potential_V1(double x) const {
  const double w = superpotential(1, x);
  return w * w - superpotential_derivative(1, x) / kSqrt2;
}

double validate_ansatz(const PotentialModel& model, int j_max) {
  if (j_max > model.bound_state_count()) {
    throw RangeError("validate_ansatz: j_max beyond bound window");
  }
  const double C = model.ansatz_C();
  double worst = 0.0;
  for (int j = model.min_index(); j <= j_max; ++j) {
    const double r = model.remainder(j);
    worst = std::max(worst, std::abs(r - C * (model.ansatz_f(j) - model.ansatz_f(j + 1))));
  }
  return worst;
}

}  // namespace qshape
