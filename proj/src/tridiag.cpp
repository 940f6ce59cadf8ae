#include "qshape/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qshape::tridiag {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_shape(std::span<const double> d, std::span<const double> e) {
  if (d.empty()) throw std::invalid_argument("tridiagonal matrix is empty");
  if (e.size() + 1 != d.size()) {
    throw std::invalid_argument("off-diagonal length must be n - 1");
  }
}

struct Bounds {
  double lo;
  double hi;
};

Bounds gershgorin(std::span<const double> d, std::span<const double> e) {
  const size_t n = d.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double pad = kEps * std::max(std::abs(lo), std::abs(hi)) * static_cast<double>(n) + kEps;
  return {lo - pad, hi + pad};
}

// Smallest x with sturm_count(x) > index, to roughly machine precision.
double bisect(std::span<const double> d, std::span<const double> e, int index, Bounds b) {
  double lo = b.lo;
  double hi = b.hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(d, e, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

void check_k(std::span<const double> d, int k) {
  if (k < 0 || static_cast<size_t>(k) > d.size()) {
    throw std::invalid_argument("requested " + std::to_string(k) + " eigenvalues of a " +
                                std::to_string(d.size()) + "x" + std::to_string(d.size()) + " matrix");
  }
}

}  // namespace

int sturm_count(std::span<const double> d, std::span<const double> e, double x) {
  const size_t n = d.size();
  // pivots that hit zero are nudged off it; the count is unaffected
  const double tiny = kEps * kEps;
  int count = 0;
  double pivot = d[0] - x;
  if (pivot == 0.0) pivot = -tiny;
  if (pivot < 0.0) ++count;
  for (size_t i = 1; i < n; ++i) {
    pivot = d[i] - x - e[i - 1] * e[i - 1] / pivot;
    if (pivot == 0.0) pivot = -tiny;
    if (pivot < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(std::span<const double> d, std::span<const double> e, int k) {
  check_shape(d, e);
  check_k(d, k);
  const Bounds b = gershgorin(d, e);
  std::vector<double> out(static_cast<size_t>(k));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < k; ++i) out[i] = bisect(d, e, i, b);
  return out;
}

std::vector<double> lowest_eigenvalues_serial(std::span<const double> d, std::span<const double> e,
                                              int k) {
  check_shape(d, e);
  check_k(d, k);
  const Bounds b = gershgorin(d, e);
  std::vector<double> out(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out[i] = bisect(d, e, i, b);
  return out;
}

std::vector<double> eigenvalues_ql(std::span<const double> d_in, std::span<const double> e_in) {
  check_shape(d_in, e_in);
  const int n = static_cast<int>(d_in.size());
  std::vector<double> d(d_in.begin(), d_in.end());
  std::vector<double> e(static_cast<size_t>(n), 0.0);
  std::copy(e_in.begin(), e_in.end(), e.begin());

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw std::runtime_error("implicit QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace qshape::tridiag
