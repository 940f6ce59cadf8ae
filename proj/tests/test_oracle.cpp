#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qshape/errors.hpp"
#include "qshape/oracle.hpp"

using qshape::PotentialKind;
using qshape::PotentialModel;

namespace {

PotentialModel ho(double w = 1.0) { return PotentialModel::make(PotentialKind::HarmonicOscillator, {{"omega", w}}); }
PotentialModel morse() {
  return PotentialModel::make(PotentialKind::Morse, {{"V0", 50.0}, {"lambda", 1.0}, {"b", 1.0}});
}
PotentialModel scarf(double V0) { return PotentialModel::make(PotentialKind::Scarf, {{"V0", V0}, {"lambda", 1.0}}); }
PotentialModel coulomb(double L) { return PotentialModel::make(PotentialKind::Coulomb, {{"Z", 1.0}, {"L", L}}); }

void check_agreement(const qshape::OracleResult& r, int levels, double tol) {
  REQUIRE(r.rows.size() == static_cast<size_t>(levels));
  for (const auto& row : r.rows) {
    INFO("n=", row.n, " alg=", row.E_algebraic, " num=", row.E_numeric);
    CHECK(row.rel_diff <= tol);
  }
  CHECK(std::abs(r.rows[0].E_numeric) <= 1e-5 * r.spectral_scale);
  CHECK(r.convergence_factor >= 3.5);
  for (size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i].E_numeric > r.rows[i - 1].E_numeric);
}

}  // namespace

TEST_CASE("oscillator levels") {
  const auto r = compare(ho(), default_grid(ho()), 4);
  check_agreement(r, 4, 1e-6);
  for (int n = 0; n < 4; ++n) CHECK(std::abs(r.rows[n].E_numeric - n) <= 1e-6);
  check_agreement(compare(ho(2.5), default_grid(ho(2.5)), 4), 4, 1e-6);
}

TEST_CASE("Morse levels") {
  const auto m = morse();
  const auto r = compare(m, {-2.0, 12.0, 4000, false}, 4);
  check_agreement(r, 4, 1e-5);
  const double want[] = {0.0, 9.0, 17.0, 24.0};
  for (int n = 0; n < 4; ++n) CHECK(r.rows[n].E_algebraic == doctest::Approx(want[n]).epsilon(1e-13));
}

TEST_CASE("Scarf levels") {
  for (double V0 : {4.0, 8.0, 20.0}) {
    const auto m = scarf(V0);
    const int levels = std::min(4, m.bound_state_count() + 1);
    check_agreement(compare(m, default_grid(m), levels), levels, 1e-5);
  }
}

TEST_CASE("Coulomb gaps") {
  const auto r = compare(coulomb(0), {0.0, 200.0, 8000, true}, 3);
  check_agreement(r, 3, 1e-5);
  CHECK(r.rows[1].E_algebraic == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(r.rows[2].E_algebraic == doctest::Approx(0.4444444444444444).epsilon(1e-15));
  check_agreement(compare(coulomb(1), default_grid(coulomb(1)), 3), 3, 1e-5);
}

TEST_CASE("oracle input validation") {
  CHECK_THROWS_AS(compare(ho(), {1.0, -1.0, 4000, false}, 2), qshape::ConfigError);
  CHECK_THROWS_AS(compare(ho(), {-1.0, 1.0, 100, false}, 2), qshape::ConfigError);
  CHECK_THROWS_AS(compare(coulomb(0), {-1.0, 10.0, 4000, false}, 2), qshape::ConfigError);
  CHECK_THROWS_AS(compare(morse(), default_grid(morse()), 11), qshape::RangeError);
  CHECK(compare(morse(), default_grid(morse()), 0).rows.empty());
  std::ostringstream os;
  write_csv(os, compare(morse(), default_grid(morse()), 0));
  CHECK(os.str() == "n,E_algebraic,E_numeric,rel_diff\n");
}

TEST_CASE("solve_spectrum is second order") {
  const auto m = ho();
  qshape::GridSpec g{-10.0, 10.0, 400, false};
  const double e0 = solve_spectrum(m, g, 3)[2] - 2.0;
  const double e1 = solve_spectrum(m, g.refined(), 3)[2] - 2.0;
  CHECK(e0 / e1 == doctest::Approx(4.0).epsilon(0.02));
}
