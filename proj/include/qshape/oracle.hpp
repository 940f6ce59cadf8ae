#pragma once

#include <iosfwd>
#include <vector>

#include "qshape/potential.hpp"

namespace qshape {

// Uniform Dirichlet grid: interior nodes x_i = x_min + (i + 1) h, i < points,
// h = (x_max - x_min) / (points + 1). Radial grids start at r = 0 (excluded).
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  int points = 4000;
  bool radial = false;

  double spacing() const { return (x_max - x_min) / (points + 1); }
  // Same interval with h halved.
  GridSpec refined() const { return {x_min, x_max, 2 * points + 1, radial}; }
};

inline constexpr int kMinGridPoints = 200;

// HO [-12, 12]/sqrt(omega); Morse [-3, 14]/lambda; Scarf [-14, 14]/lambda;
// Coulomb (0, 60 (L+3)^2 / Z]; 4000 points.
GridSpec default_grid(const PotentialModel& model);

// Lowest n_levels eigenvalues of the 3-point discretisation of
// H1 = -1/2 d^2/dx^2 + V1(x), ascending.
std::vector<double> solve_spectrum(const PotentialModel& model, const GridSpec& grid, int n_levels);

struct OracleRow {
  int n = 0;
  double E_algebraic = 0.0;
  double E_numeric = 0.0;
  double rel_diff = 0.0;
};

struct OracleResult {
  std::vector<OracleRow> rows;
  GridSpec grid;                   // finest grid used
  double spectral_scale = 0.0;     // hbar_omega * e_{top level}
  double convergence_factor = 0.0; // smallest error ratio under the last h-halving
};

// Compares hbar_omega * e_n (n < n_levels) with the discretised H1. Starting from
// `grid`, h is halved until every level shows second-order convergence
// (error ratio >= 3.5) and the successive change is below 1e-6 of the spectral
// scale; E_numeric is the Richardson extrapolation of the last two grids.
OracleResult compare(const PotentialModel& model, const GridSpec& grid, int n_levels);

void write_csv(std::ostream& os, const OracleResult& result);
void write_json(std::ostream& os, const OracleResult& result);

}  // namespace qshape
