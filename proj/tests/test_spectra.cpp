#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qshape/errors.hpp"
#include "qshape/spectra.hpp"

using qshape::DeformationScheme;
using qshape::PotentialKind;
using qshape::PotentialModel;
using qshape::QParam;
using qshape::Variant;

namespace {

PotentialModel ho() { return PotentialModel::make(PotentialKind::HarmonicOscillator, {{"omega", 1.0}}); }
PotentialModel morse() {
  return PotentialModel::make(PotentialKind::Morse, {{"V0", 50.0}, {"lambda", 1.0}, {"b", 1.0}});
}
PotentialModel scarf() { return PotentialModel::make(PotentialKind::Scarf, {{"V0", 8.0}, {"lambda", 1.0}}); }
PotentialModel coulomb(double L) { return PotentialModel::make(PotentialKind::Coulomb, {{"Z", 1.0}, {"L", L}}); }

std::vector<PotentialModel> catalog() { return {ho(), morse(), scarf(), coulomb(1)}; }

constexpr Variant kVariants[] = {Variant::Standard, Variant::ArikCoonQ, Variant::DModel, Variant::SModel};

}  // namespace

TEST_CASE("deformed energy reference values") {
  const auto m = ho();
  CHECK(deformed_energy(m, {Variant::Standard, QParam(1.2)}, 2) ==
        doctest::Approx(2.0333333333333333).epsilon(1e-14));
  CHECK(deformed_energy(m, {Variant::SModel, QParam(1.2)}, 2) == doctest::Approx(4.21632).epsilon(1e-14));
  // [2]_{1.44} = 2.44; D-model on the oscillator: q^{e-1} [e]_q
  CHECK(deformed_energy(m, {Variant::ArikCoonQ, QParam(1.2)}, 2) == doctest::Approx(2.44).epsilon(1e-14));
  CHECK(deformed_energy(m, {Variant::DModel, QParam(1.2)}, 2) ==
        doctest::Approx(1.2 * 2.0333333333333333).epsilon(1e-14));
  for (const auto& model : catalog())
    for (Variant v : kVariants) CHECK(deformed_energy(model, {v, QParam(1.37)}, 0) == 0.0);
  CHECK_THROWS_AS(deformed_energy(morse(), {Variant::Standard, QParam(1.1)}, 10), qshape::RangeError);
}

TEST_CASE("functional F and G sequence reference values") {
  CHECK(functional_F(ho(), QParam(1.3)) == 1.0);
  CHECK(functional_F(morse(), QParam(1.1)) == doctest::Approx(std::pow(1.1, -1.1025)).epsilon(1e-14));
  CHECK(functional_F(morse(), QParam(1.1)) == doctest::Approx(0.90025297372771200).epsilon(1e-14));
  for (const auto& m : catalog()) CHECK(functional_F(m, QParam(1.0)) == 1.0);

  CHECK(g_sequence(ho(), QParam(1.2), 1) == doctest::Approx(1.728).epsilon(1e-14));
  CHECK(g_sequence(ho(), QParam(1.2), 2) == doctest::Approx(2.48832).epsilon(1e-14));
  CHECK(s_model_energy_sum(ho(), QParam(1.2), 2) == doctest::Approx(4.21632).epsilon(1e-14));
  CHECK(s_model_energy_closed(ho(), QParam(1.2), 2) == doctest::Approx(4.21632).epsilon(1e-14));
  CHECK(s_model_energy_sum(morse(), QParam(1.2), 0) == 0.0);
  // mpmath, 40 digits
  CHECK(s_model_energy_sum(morse(), QParam(1.05), 3) == doctest::Approx(0.44981384973870097).epsilon(1e-13));
  for (const auto& m : catalog()) {
    for (int k = 1; k <= std::min(5, m.bound_state_count()); ++k) {
      CHECK(g_sequence(m, QParam(1.0), k) == doctest::Approx(m.remainder(k)).epsilon(1e-15));
      CHECK(s_model_energy_closed(m, QParam(1.0), k) == doctest::Approx(m.energy(k)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(g_sequence(morse(), QParam(1.1), 10), qshape::RangeError);
}

TEST_CASE("L = 0 Coulomb has no base functional") {
  // a_0 = -1 makes f(a_0) singular
  CHECK_THROWS(functional_F(coulomb(0), QParam(1.1)));
  CHECK_THROWS(s_model_energy_closed(coulomb(0), QParam(1.1), 2));
  CHECK_NOTHROW(s_model_energy_sum(coulomb(0), QParam(1.1), 2));
}

TEST_CASE("property: shift identity F_k = prod q^{R(a_j)} F") {
  for (const auto& m : catalog()) {
    for (double qv : {0.8, 0.95, 1.05, 1.3}) {
      const QParam q(qv);
      const double F = functional_F(m, q);
      double prod = 1.0;
      for (int k = 1; k <= std::min(10, m.bound_state_count()); ++k) {
        prod *= q.pow(m.remainder(k - 1));
        CHECK(functional_F_shifted(m, q, k) == doctest::Approx(prod * F).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("property: S-model sum and closed form agree") {
  for (const auto& m : catalog()) {
    for (double qv : {0.8, 0.95, 1.05, 1.3}) {
      const QParam q(qv);
      for (int n = 0; n <= std::min(m.bound_state_count(), 30); ++n) {
        const double s = s_model_energy_sum(m, q, n);
        const double c = s_model_energy_closed(m, q, n);
        CHECK(std::abs(s - c) <= 1e-11 * (1.0 + std::abs(c)));
      }
    }
  }
}

TEST_CASE("property: classical limit, inversion and bridge") {
  for (const auto& m : catalog()) {
    const int top = std::min(m.bound_state_count(), 10);
    for (int n = 1; n <= top; ++n) {
      const double e = m.energy(n);
      for (Variant v : kVariants) {
        for (double qv : {1.0 - 1e-6, 1.0 + 1e-6}) {
          const double E = deformed_energy(m, {v, QParam(qv)}, n);
          CHECK(std::abs(E - e) <= 1e-4 * e);
        }
      }
      for (double qv : {0.4, 0.8, 1.3, 2.5}) {
        CHECK(deformed_energy(m, {Variant::Standard, QParam(qv)}, n) ==
              doctest::Approx(deformed_energy(m, {Variant::Standard, QParam(1.0 / qv)}, n)).epsilon(1e-12));
        const QParam q(qv);
        CHECK(deformed_energy(m, {Variant::ArikCoonQ, q}, n) ==
              doctest::Approx(q.pow(e) * qshape::q_bracket(e, q) / qv).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("property: monotone deformed spectra") {
  for (const auto& m : catalog()) {
    const int top = std::min(m.bound_state_count(), 12);
    for (double qv : {0.5, 0.8, 0.95, 1.05, 1.3, 2.0}) {
      for (Variant v : kVariants) {
        // below q = 1 the D-model factor q^{-R(a_n)} can outgrow the bracket when R shrinks
        if (v == Variant::DModel && qv < 1.0) continue;
        for (int n = 1; n <= top; ++n) {
          CHECK(deformed_energy(m, {v, QParam(qv)}, n) > deformed_energy(m, {v, QParam(qv)}, n - 1));
        }
      }
    }
  }
  const DeformationScheme d{Variant::DModel, QParam(0.8)};
  CHECK(deformed_energy(scarf(), d, 2) < deformed_energy(scarf(), d, 1));
  for (int n = 1; n <= 20; ++n) CHECK(deformed_energy(ho(), d, n) > deformed_energy(ho(), d, n - 1));
}

TEST_CASE("spectrum table") {
  const auto table = build_spectrum_table(ho(), DeformationScheme{Variant::SModel, QParam(1.2)}, 2);
  REQUIRE(table.rows.size() == 3);
  CHECK(!table.rows[0].G_n.has_value());
  CHECK(*table.rows[2].G_n == doctest::Approx(2.48832));
  std::ostringstream csv;
  write_csv(csv, table);
  CHECK(csv.str() ==
        "n,e_n,E_deformed,G_n\n0,0,0,\n1,1,1.728,1.728\n2,2,4.2163199999999996,2.4883199999999999\n");

  const auto plain = build_spectrum_table(morse(), std::nullopt, 1);
  std::ostringstream json;
  write_json(json, plain);
  CHECK(json.str() ==
        "[\n  {\"n\": 0, \"e_n\": 0, \"E_deformed\": null, \"G_n\": null},\n"
        "  {\"n\": 1, \"e_n\": 0.18000000000000005, \"E_deformed\": null, \"G_n\": null}\n]\n");
  CHECK_THROWS_AS(build_spectrum_table(morse(), std::nullopt, 10), qshape::RangeError);
}

TEST_CASE("variant names") {
  for (Variant v : kVariants) CHECK(qshape::parse_variant(qshape::to_string(v)) == v);
  CHECK(qshape::parse_variant("SModel") == Variant::SModel);
  CHECK_THROWS_AS(qshape::parse_variant("zmodel"), qshape::ConfigError);
}
