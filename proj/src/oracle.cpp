#include "qshape/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "qshape/errors.hpp"
#include "qshape/format.hpp"
#include "qshape/tridiag.hpp"

namespace qshape {

namespace {

constexpr double kRequiredOrderFactor = 3.5;
constexpr double kChangeTolerance = 1e-6;
constexpr int kMaxGridPoints = 1 << 21;

void check_grid(const PotentialModel& model, const GridSpec& grid) {
  if (!(grid.x_min < grid.x_max)) {
    throw ConfigError("grid requires x_min < x_max");
  }
  if (grid.points < kMinGridPoints) {
    throw ConfigError("grid needs at least " + std::to_string(kMinGridPoints) + " points");
  }
  const bool coulomb = model.kind() == PotentialKind::Coulomb;
  if (coulomb && (!grid.radial || grid.x_min < 0.0)) {
    throw ConfigError("Coulomb oracle needs a radial grid starting at r = 0");
  }
}

void check_levels(const PotentialModel& model, int n_levels) {
  if (n_levels < 0 || n_levels > model.bound_state_count() + 1) {
    throw RangeError("requested " + std::to_string(n_levels) + " levels but " + model.label() +
                     " has " + std::to_string(model.bound_state_count() + 1) + " bound states");
  }
}

}  // namespace

GridSpec default_grid(const PotentialModel& model) {
  switch (model.kind()) {
    case PotentialKind::HarmonicOscillator: {
      const double w = std::sqrt(model.param("omega"));
      return {-12.0 / w, 12.0 / w, 4000, false};
    }
    case PotentialKind::Morse: {
      const double l = model.param("lambda");
      return {-3.0 / l, 14.0 / l, 4000, false};
    }
    case PotentialKind::Scarf: {
      const double l = model.param("lambda");
      return {-14.0 / l, 14.0 / l, 4000, false};
    }
    case PotentialKind::Coulomb: {
      const double L = model.param("L");
      return {0.0, 60.0 * (L + 3.0) * (L + 3.0) / model.param("Z"), 4000, true};
    }
  }
  return {};
}

std::vector<double> solve_spectrum(const PotentialModel& model, const GridSpec& grid, int n_levels) {
  check_grid(model, grid);
  check_levels(model, n_levels);
  if (n_levels == 0) return {};

  const size_t n = static_cast<size_t>(grid.points);
  const double h = grid.spacing();
  const double kinetic = 1.0 / (h * h);
  std::vector<double> d(n);
  std::vector<double> e(n - 1, -0.5 * kinetic);
  for (size_t i = 0; i < n; ++i) {
    d[i] = kinetic + model.partner_potential_V1(grid.x_min + static_cast<double>(i + 1) * h);
  }
  return tridiag::lowest_eigenvalues(d, e, n_levels);
}

OracleResult compare(const PotentialModel& model, const GridSpec& grid, int n_levels) {
  check_grid(model, grid);
  check_levels(model, n_levels);

  OracleResult result;
  result.grid = grid;
  if (n_levels == 0) return result;

  const double hw = model.hbar_omega();
  const int top = std::min(std::max(n_levels - 1, 1), model.bound_state_count());
  const std::vector<double> e = model.energy_ladder(top);
  // a single-level model has no gap; fall back to the energy unit
  result.spectral_scale = top > 0 ? hw * e.back() : hw;
  const double scale = result.spectral_scale;

  GridSpec current = grid;
  std::vector<double> coarse = solve_spectrum(model, current, n_levels);
  current = current.refined();
  std::vector<double> fine = solve_spectrum(model, current, n_levels);

  // Differences at or below this size are at the eigensolver's rounding floor.
  const auto noise = [&](const GridSpec& g) {
    return 64.0 * std::numeric_limits<double>::epsilon() / (g.spacing() * g.spacing());
  };

  for (;;) {
    if (current.points > kMaxGridPoints) {
      throw ConfigError("oracle grid did not converge below " + std::to_string(kMaxGridPoints) +
                        " points for " + model.label());
    }
    GridSpec next = current.refined();
    std::vector<double> finer = solve_spectrum(model, next, n_levels);

    bool converged = true;
    double factor = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_levels; ++k) {
      const double d1 = fine[k] - coarse[k];
      const double d2 = finer[k] - fine[k];
      if (std::abs(d2) > kChangeTolerance * scale) converged = false;
      if (std::abs(d2) > noise(next) && std::abs(d1) > noise(current)) {
        const double ratio = d1 / d2;
        factor = std::min(factor, ratio);
        if (ratio < kRequiredOrderFactor) converged = false;
      }
    }
    coarse = std::move(fine);
    fine = std::move(finer);
    current = next;
    if (converged) {
      result.convergence_factor = factor;
      break;
    }
  }

  result.grid = current;
  for (int k = 0; k < n_levels; ++k) {
    OracleRow row;
    row.n = k;
    row.E_algebraic = hw * e[k];
    row.E_numeric = fine[k] + (fine[k] - coarse[k]) / 3.0;
    row.rel_diff = std::abs(row.E_numeric - row.E_algebraic) / std::max(std::abs(row.E_algebraic), scale);
    result.rows.push_back(row);
  }
  return result;
}

void write_csv(std::ostream& os, const OracleResult& result) {
  os << "n,E_algebraic,E_numeric,rel_diff\n";
  for (const auto& row : result.rows) {
    os << row.n << ',' << fmt_real(row.E_algebraic) << ',' << fmt_real(row.E_numeric) << ','
       << fmt_real(row.rel_diff) << '\n';
  }
}

void write_json(std::ostream& os, const OracleResult& result) {
  os << "[";
  for (size_t i = 0; i < result.rows.size(); ++i) {
    const auto& row = result.rows[i];
    os << (i == 0 ? "\n" : ",\n") << "  {\"n\": " << row.n
       << ", \"E_algebraic\": " << fmt_real(row.E_algebraic)
       << ", \"E_numeric\": " << fmt_real(row.E_numeric) << ", \"rel_diff\": " << fmt_real(row.rel_diff)
       << "}";
  }
  os << (result.rows.empty() ? "]\n" : "\n]\n");
}

}  // namespace qshape
