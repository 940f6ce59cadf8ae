#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qshape/matrix.hpp"
#include "qshape/potential.hpp"
#include "qshape/qnum.hpp"

namespace qshape {

// Raising / lowering pair in the energy eigenbasis |Psi_0>..|Psi_{N-1}>.
// plus has a single band at (n+1, n); minus is its transpose.
struct LadderPair {
  Matrix plus;
  Matrix minus;
};

// Builds a ladder pair from the band values plus(n+1, n) = band[n].
LadderPair ladder_from_band(std::span<const double> band);

// Band n:
//   B   sqrt(e_{n+1})
//   Bq  sqrt([e_{n+1}]_q)
//   C   sqrt([e_{n+1}]_{q^2})
//   D   q^{(e_{n+1} - R(a_{n+1}))/2} sqrt([e_{n+1}]_q)
//   S   sqrt(G_1 + ... + G_{n+1})
// Requires 1 <= N <= bound_state_count + 1.
LadderPair build_B(const PotentialModel& model, int N);
LadderPair build_Bq(const PotentialModel& model, QParam q, int N);
LadderPair build_C(const PotentialModel& model, QParam q, int N);
LadderPair build_D(const PotentialModel& model, QParam q, int N);
LadderPair build_S(const PotentialModel& model, QParam q, int N);

// A parameter functional with base index j (R(a_j), q^{R(a_j)}, G_j, ...) acting
// diagonally: on |Psi_n> it takes the scalar value at ladder index n + 1 - j.
// Negative indices, out-of-window indices and non-finite values are invalid
// and carry NaN in matrix(), so they poison only the entries they reach.
struct DiagFunctional {
  int base_index = 0;
  std::vector<double> values;
  std::vector<bool> valid;

  Matrix matrix() const;
};

using ScalarFn = std::function<double(int ladder_index)>;

DiagFunctional build_diag(const ScalarFn& scalar_fn, int base_index, int N);

// diag(fn(e_0), ..., fn(e_{N-1})), i.e. fn(B+B-).
Matrix number_function(const PotentialModel& model, int N, const std::function<double(double)>& fn);

struct VerificationReport {
  std::string relation;
  std::string model;
  double q = 1.0;
  int N = 0;
  int interior = 0;
  int masked = 0;  // interior entries skipped because an invalid functional value reached them
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kDefaultResidualTolerance = 1e-10;

// Fixed order used by every batch.
inline constexpr std::array<std::string_view, 14> kRelationIds = {
    "cb1",   "tower",   "h12n",    "std+",   "std-", "ho_std", "cmodel",
    "Qmodel", "ho_Q",   "dmodel",  "ho_d",   "smodel", "s_tower", "s_tower2"};

// Truncation reach of every relation: the last 2 * reach rows and columns are excluded.
inline constexpr int kRelationReach = 1;
inline constexpr int kMinBasisSize = 4;

// Checks one relation on the interior block. The ho_* relations are statements
// about the oscillator reduction and always run on HarmonicOscillator{omega=1};
// `model` then only labels the report.
VerificationReport verify_relation(std::string_view relation_id, const PotentialModel& model, QParam q,
                                   int N, double tolerance = kDefaultResidualTolerance);

// Every relation for every q, in (q, relation) order. Relations run in parallel
// across OpenMP threads; the serial variant is the reference path.
std::vector<VerificationReport> verify_batch(const PotentialModel& model,
                                             std::span<const double> q_list, int N,
                                             double tolerance = kDefaultResidualTolerance);
std::vector<VerificationReport> verify_batch_serial(const PotentialModel& model,
                                                    std::span<const double> q_list, int N,
                                                    double tolerance = kDefaultResidualTolerance);

void write_json(std::ostream& os, std::span<const VerificationReport> reports);

}  // namespace qshape
