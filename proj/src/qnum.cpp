#include "qshape/qnum.hpp"

#include <cmath>
#include <string>

#include "qshape/errors.hpp"

namespace qshape {

namespace {

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

void check_exponent(double x, double log_base) {
  if (std::abs(x * log_base) > kExponentGuard) {
    throw OverflowError("q-number exponent |x ln q| = " + std::to_string(std::abs(x * log_base)) +
                        " exceeds guard " + std::to_string(kExponentGuard));
  }
}

}  // namespace

QParam::QParam(double q) : q_(q), log_q_(0.0) {
  if (!std::isfinite(q) || !(q > 0.0)) {
    throw DomainError("deformation parameter q must be a finite positive real, got " +
                      std::to_string(q));
  }
  log_q_ = std::log(q);
}

double QParam::pow(double x) const {
  check_finite(x, "exponent");
  check_exponent(x, log_q_);
  return std::exp(x * log_q_);
}

double q_bracket(double x, QParam q) {
  check_finite(x, "q-number argument");
  const double u = q.log();
  check_exponent(x, u);
  if (std::abs(u) < kLimitThreshold) {
    // sinh(xu)/sinh(u) expanded to fourth order in u
    const double x2 = x * x;
    const double u2 = u * u;
    return x * (1.0 + (x2 - 1.0) * u2 / 6.0 + (3.0 * x2 * x2 - 10.0 * x2 + 7.0) * u2 * u2 / 360.0);
  }
  return std::sinh(x * u) / std::sinh(u);
}

double Q_bracket(double x, double Q) {
  check_finite(x, "Q-number argument");
  if (!std::isfinite(Q) || !(Q > 0.0)) {
    throw DomainError("Q must be a finite positive real, got " + std::to_string(Q));
  }
  const double v = std::log(Q);
  check_exponent(x, v);
  if (std::abs(v) < kLimitThreshold) {
    // expm1(xv)/expm1(v) expanded to second order in v
    return x * (1.0 + (x - 1.0) * v / 2.0 + (x - 1.0) * (2.0 * x - 1.0) * v * v / 12.0);
  }
  return std::expm1(x * v) / std::expm1(v);
}

double bracket_bridge(double x, QParam q) {
  return q.pow(x - 1.0) * q_bracket(x, q);
}

}  // namespace qshape
