#pragma once

// q-number arithmetic shared by every deformed formula.
//
//   [x]_q = (q^x - q^-x) / (q - q^-1)      symmetric q-number
//   [x]_Q = (Q^x - 1) / (Q - 1)            Arik-Coon Q-number
//
// Both are evaluated through hyperbolic / expm1 forms so that the path stays
// continuous through q = 1, where the naive quotient cancels catastrophically.

namespace qshape {

// Largest admissible |x ln q| before the evaluation reports overflow.
inline constexpr double kExponentGuard = 700.0;

// Below this |ln q| the brackets switch to their Taylor expansions in ln q.
inline constexpr double kLimitThreshold = 1e-6;

// Strictly positive, finite deformation parameter.
class QParam {
 public:
  explicit QParam(double q);

  double value() const { return q_; }
  double log() const { return log_q_; }
  bool is_classical() const { return log_q_ == 0.0; }

  // q raised to a real power, through the exponent guard.
  double pow(double x) const;

 private:
  double q_;
  double log_q_;
};

// [x]_q. Odd in x, invariant under q -> 1/q, tends to x as q -> 1.
double q_bracket(double x, QParam q);

// [x]_Q with Q > 0. Tends to x as Q -> 1.
double Q_bracket(double x, double Q);

// q^x [x]_q / q, which equals [x]_{q^2} in Q-form.
double bracket_bridge(double x, QParam q);

}  // namespace qshape
