#include "qshape/algebra.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <utility>

#include "qshape/errors.hpp"
#include "qshape/format.hpp"
#include "qshape/spectra.hpp"

namespace qshape {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_basis(const PotentialModel& model, int N) {
  if (N < 1) {
    throw ConfigError("matrix size N must be >= 1");
  }
  if (N > model.bound_state_count() + 1) {
    throw RangeError("N = " + std::to_string(N) + " exceeds the bound window of " + model.label() +
                     " (max " + std::to_string(model.bound_state_count() + 1) + ")");
  }
}

template <class BandFn>
LadderPair build_from(const PotentialModel& model, int N, BandFn&& band_at) {
  check_basis(model, N);
  std::vector<double> band(static_cast<size_t>(N > 0 ? N - 1 : 0));
  for (int n = 0; n + 1 < N; ++n) band[n] = band_at(n);
  return ladder_from_band(band);
}

// Interior residual skipping entries that an invalid functional value reached.
struct Residual {
  double max_abs = 0.0;
  int masked = 0;
};

void accumulate(Residual& r, const Matrix& lhs, const Matrix& rhs, int hi) {
  for (int i = 0; i < hi; ++i) {
    for (int j = 0; j < hi; ++j) {
      const double a = lhs(i, j);
      const double b = rhs(i, j);
      if (std::isnan(a) || std::isnan(b)) {
        ++r.masked;
        continue;
      }
      r.max_abs = std::max(r.max_abs, std::abs(a - b));
    }
  }
}

using Sides = std::vector<std::pair<Matrix, Matrix>>;

const PotentialModel& unit_oscillator() {
  static const PotentialModel ho =
      PotentialModel::make(PotentialKind::HarmonicOscillator, {{"omega", 1.0}});
  return ho;
}

// Functionals of the remainder sequence.
DiagFunctional remainder_diag(const PotentialModel& m, int j, int N,
                              const std::function<double(double)>& fn) {
  return build_diag([&](int k) { return fn(m.remainder(k)); }, j, N);
}

Matrix R_op(const PotentialModel& m, int j, int N) {
  return remainder_diag(m, j, N, [](double r) { return r; }).matrix();
}

Matrix G_op(const PotentialModel& m, QParam q, int j, int N) {
  return build_diag([&](int k) { return g_sequence(m, q, k); }, j, N).matrix();
}

Sides relation_cb1(const PotentialModel& m, int N) {
  const LadderPair B = build_B(m, N);
  return {{commutator(B.minus, B.plus), R_op(m, 0, N)}};
}

Sides relation_tower(const PotentialModel& m, int N) {
  const LadderPair B = build_B(m, N);
  const Matrix R0 = R_op(m, 0, N);
  const Matrix R1 = R_op(m, 1, N);
  const Matrix R2 = R_op(m, 2, N);
  const Matrix first = R1 - R0;
  const Matrix second = R2 - 2.0 * R1 + R0;
  return {
      {commutator(B.plus, R0), first * B.plus},
      {commutator(R0, B.minus), B.minus * first},
      {commutator(B.plus, first), second * B.plus},
      {commutator(first, B.minus), B.minus * second},
  };
}

Sides relation_h12n(const PotentialModel& m, int N) {
  const LadderPair B = build_B(m, N);
  const double scale = m.hbar_omega();
  const Matrix e = number_function(m, N, [](double x) { return x; });
  return {
      {scale * (B.plus * B.minus), scale * e},
      {B.minus * B.plus, e + R_op(m, 0, N)},
  };
}

Sides relation_std(const PotentialModel& m, QParam q, int N, double sign) {
  const LadderPair Bq = build_Bq(m, q, N);
  const Matrix q_R0 = remainder_diag(m, 0, N, [&](double r) { return q.pow(sign * r); }).matrix();
  const Matrix bracket_R0 = remainder_diag(m, 0, N, [&](double r) { return q_bracket(r, q); }).matrix();
  const Matrix q_N = number_function(m, N, [&](double e) { return q.pow(-sign * e); });
  return {{Bq.minus * Bq.plus - q_R0 * (Bq.plus * Bq.minus), bracket_R0 * q_N}};
}

Sides relation_ho_std(QParam q, int N) {
  const PotentialModel& ho = unit_oscillator();
  const LadderPair a = build_Bq(ho, q, N);
  Sides sides;
  for (double sign : {1.0, -1.0}) {
    const Matrix lhs = a.minus * a.plus - q.pow(sign) * (a.plus * a.minus);
    sides.emplace_back(lhs, number_function(ho, N, [&](double n) { return q.pow(-sign * n); }));
  }
  return sides;
}

Sides relation_cmodel(const PotentialModel& m, QParam q, int N) {
  const LadderPair C = build_C(m, q, N);
  const Matrix q2_R0 = remainder_diag(m, 0, N, [&](double r) { return q.pow(2.0 * r); }).matrix();
  const Matrix rhs =
      remainder_diag(m, 0, N, [&](double r) { return q.pow(r) * q_bracket(r, q) / q.value(); }).matrix();
  return {{C.minus * C.plus - q2_R0 * (C.plus * C.minus), rhs}};
}

Sides relation_Qmodel(const PotentialModel& m, QParam q, int N) {
  const double Q = q.value() * q.value();
  const LadderPair BQ = build_C(m, q, N);
  const Matrix Q_R0 = remainder_diag(m, 0, N, [&](double r) { return std::pow(Q, r); }).matrix();
  const Matrix rhs = remainder_diag(m, 0, N, [&](double r) { return Q_bracket(r, Q); }).matrix();
  return {{BQ.minus * BQ.plus - Q_R0 * (BQ.plus * BQ.minus), rhs}};
}

Sides relation_ho_Q(QParam q, int N) {
  const PotentialModel& ho = unit_oscillator();
  const LadderPair b = build_C(ho, q, N);
  const double Q = q.value() * q.value();
  return {{b.minus * b.plus - Q * (b.plus * b.minus), Matrix::identity(N)}};
}

Sides relation_dmodel(const PotentialModel& m, QParam q, int N) {
  const LadderPair D = build_D(m, q, N);
  const auto q_pow = [&](double r) { return q.pow(r); };
  const Matrix coeff = remainder_diag(m, 0, N, q_pow).matrix() * remainder_diag(m, 1, N, q_pow).matrix();
  const Matrix rhs = remainder_diag(m, 0, N, [&](double r) { return q_bracket(r, q); }).matrix();
  return {{D.minus * D.plus - coeff * (D.plus * D.minus), rhs}};
}

Sides relation_ho_d(QParam q, int N) {
  const PotentialModel& ho = unit_oscillator();
  const LadderPair b = build_D(ho, q, N);
  const double q2 = q.value() * q.value();
  return {{b.minus * b.plus - q2 * (b.plus * b.minus), Matrix::identity(N)}};
}

Sides relation_smodel(const PotentialModel& m, QParam q, int N) {
  const LadderPair S = build_S(m, q, N);
  return {{commutator(S.minus, S.plus), G_op(m, q, 0, N)}};
}

Sides relation_s_tower(const PotentialModel& m, QParam q, int N) {
  const LadderPair S = build_S(m, q, N);
  const double scale = m.hbar_omega();
  const Matrix H = scale * (S.plus * S.minus);
  Sides sides;
  Matrix up = S.plus;
  Matrix down = S.minus;
  Matrix g_sum(N);
  for (int k = 1; k <= 2; ++k) {
    g_sum += G_op(m, q, k, N);
    sides.emplace_back(commutator(H, up), scale * (g_sum * up));
    sides.emplace_back(commutator(H, down), -scale * (down * g_sum));
    up = up * S.plus;
    down = down * S.minus;
  }
  return sides;
}

Sides relation_s_tower2(const PotentialModel& m, QParam q, int N) {
  const LadderPair S = build_S(m, q, N);
  Sides sides;
  for (int j = 0; j <= 1; ++j) {
    const Matrix G0 = G_op(m, q, j, N);
    const Matrix G1 = G_op(m, q, j + 1, N);
    const Matrix G2 = G_op(m, q, j + 2, N);
    const Matrix first = G1 - G0;
    sides.emplace_back(commutator(S.plus, G0), first * S.plus);
    sides.emplace_back(commutator(S.plus, first), (G2 - 2.0 * G1 + G0) * S.plus);
  }
  return sides;
}

Sides assemble(std::string_view id, const PotentialModel& m, QParam q, int N) {
  if (id == "cb1") return relation_cb1(m, N);
  if (id == "tower") return relation_tower(m, N);
  if (id == "h12n") return relation_h12n(m, N);
  if (id == "std+") return relation_std(m, q, N, 1.0);
  if (id == "std-") return relation_std(m, q, N, -1.0);
  if (id == "ho_std") return relation_ho_std(q, N);
  if (id == "cmodel") return relation_cmodel(m, q, N);
  if (id == "Qmodel") return relation_Qmodel(m, q, N);
  if (id == "ho_Q") return relation_ho_Q(q, N);
  if (id == "dmodel") return relation_dmodel(m, q, N);
  if (id == "ho_d") return relation_ho_d(q, N);
  if (id == "smodel") return relation_smodel(m, q, N);
  if (id == "s_tower") return relation_s_tower(m, q, N);
  if (id == "s_tower2") return relation_s_tower2(m, q, N);
  throw ConfigError("unknown relation id '" + std::string(id) + "'");
}

bool is_known(std::string_view id) {
  for (auto known : kRelationIds)
    if (known == id) return true;
  return false;
}

void check_verification_size(const PotentialModel& model, int N) {
  if (N < kMinBasisSize) {
    throw ConfigError("N = " + std::to_string(N) + " too small for relation band reach (need N >= " +
                      std::to_string(kMinBasisSize) + ")");
  }
  check_basis(model, N);
}

}  // namespace

LadderPair ladder_from_band(std::span<const double> band) {
  const size_t N = band.size() + 1;
  Matrix plus(N);
  for (size_t n = 0; n < band.size(); ++n) plus(n + 1, n) = band[n];
  Matrix minus = plus.transpose();
  return {std::move(plus), std::move(minus)};
}

LadderPair build_B(const PotentialModel& model, int N) {
  const auto e = model.energy_ladder(std::max(0, N - 1));
  return build_from(model, N, [&](int n) { return std::sqrt(e[n + 1]); });
}

LadderPair build_Bq(const PotentialModel& model, QParam q, int N) {
  const auto e = model.energy_ladder(std::max(0, N - 1));
  return build_from(model, N, [&](int n) { return std::sqrt(q_bracket(e[n + 1], q)); });
}

LadderPair build_C(const PotentialModel& model, QParam q, int N) {
  const auto e = model.energy_ladder(std::max(0, N - 1));
  const double Q = q.value() * q.value();
  return build_from(model, N, [&](int n) { return std::sqrt(Q_bracket(e[n + 1], Q)); });
}

LadderPair build_D(const PotentialModel& model, QParam q, int N) {
  const auto e = model.energy_ladder(std::max(0, N - 1));
  return build_from(model, N, [&](int n) {
    return q.pow(0.5 * (e[n + 1] - model.remainder(n + 1))) * std::sqrt(q_bracket(e[n + 1], q));
  });
}

LadderPair build_S(const PotentialModel& model, QParam q, int N) {
  check_basis(model, N);
  return build_from(model, N, [&](int n) { return std::sqrt(s_model_energy_sum(model, q, n + 1)); });
}

Matrix DiagFunctional::matrix() const {
  Matrix m(values.size());
  for (size_t n = 0; n < values.size(); ++n) m(n, n) = valid[n] ? values[n] : kNaN;
  return m;
}

DiagFunctional build_diag(const ScalarFn& scalar_fn, int base_index, int N) {
  DiagFunctional d;
  d.base_index = base_index;
  d.values.assign(static_cast<size_t>(N), 0.0);
  d.valid.assign(static_cast<size_t>(N), false);
  for (int n = 0; n < N; ++n) {
    const int k = n + 1 - base_index;
    if (k < 0) continue;
    try {
      const double v = scalar_fn(k);
      if (std::isfinite(v)) {
        d.values[n] = v;
        d.valid[n] = true;
      }
    } catch (const RangeError&) {
    } catch (const DomainError&) {
    } catch (const OverflowError&) {
    }
  }
  return d;
}

Matrix number_function(const PotentialModel& model, int N, const std::function<double(double)>& fn) {
  const auto e = model.energy_ladder(N - 1);
  std::vector<double> d(e.size());
  for (size_t n = 0; n < e.size(); ++n) d[n] = fn(e[n]);
  return Matrix::diagonal(d);
}

VerificationReport verify_relation(std::string_view relation_id, const PotentialModel& model, QParam q,
                                   int N, double tolerance) {
  if (!is_known(relation_id)) {
    throw ConfigError("unknown relation id '" + std::string(relation_id) + "'");
  }
  check_verification_size(model, N);

  VerificationReport report;
  report.relation = std::string(relation_id);
  report.model = model.label();
  report.q = q.value();
  report.N = N;
  report.interior = N - 2 * kRelationReach;
  report.tolerance = tolerance;

  Residual residual;
  for (const auto& [lhs, rhs] : assemble(relation_id, model, q, N)) {
    accumulate(residual, lhs, rhs, report.interior);
  }
  report.max_residual = residual.max_abs;
  report.masked = residual.masked;
  report.pass = residual.max_abs <= tolerance;
  return report;
}

std::vector<VerificationReport> verify_batch_serial(const PotentialModel& model,
                                                    std::span<const double> q_list, int N,
                                                    double tolerance) {
  check_verification_size(model, N);
  std::vector<VerificationReport> out;
  out.reserve(q_list.size() * kRelationIds.size());
  for (double qv : q_list) {
    const QParam q(qv);
    for (auto id : kRelationIds) out.push_back(verify_relation(id, model, q, N, tolerance));
  }
  return out;
}

std::vector<VerificationReport> verify_batch(const PotentialModel& model, std::span<const double> q_list,
                                             int N, double tolerance) {
  check_verification_size(model, N);
  std::vector<QParam> qs;
  qs.reserve(q_list.size());
  for (double qv : q_list) qs.emplace_back(qv);

  const long tasks = static_cast<long>(qs.size() * kRelationIds.size());
  std::vector<VerificationReport> out(static_cast<size_t>(tasks));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    try {
      const auto& q = qs[static_cast<size_t>(t) / kRelationIds.size()];
      const auto id = kRelationIds[static_cast<size_t>(t) % kRelationIds.size()];
      out[static_cast<size_t>(t)] = verify_relation(id, model, q, N, tolerance);
    } catch (...) {
#pragma omp critical(qshape_verify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void write_json(std::ostream& os, std::span<const VerificationReport> reports) {
  os << "[";
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << (i == 0 ? "\n" : ",\n") << "  {\"relation\": " << json_quote(r.relation)
       << ", \"model\": " << json_quote(r.model) << ", \"q\": " << fmt_real(r.q) << ", \"N\": " << r.N
       << ", \"interior\": " << r.interior << ", \"masked\": " << r.masked
       << ", \"max_residual\": " << fmt_real(r.max_residual)
       << ", \"tolerance\": " << fmt_real(r.tolerance) << ", \"pass\": " << (r.pass ? "true" : "false")
       << "}";
  }
  os << (reports.empty() ? "]\n" : "\n]\n");
}

}  // namespace qshape
