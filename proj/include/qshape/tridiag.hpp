#pragma once

#include <span>
#include <vector>

namespace qshape::tridiag {

// Symmetric tridiagonal matrix with diagonal d[0..n) and off-diagonal e[0..n-1).

// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
int sturm_count(std::span<const double> d, std::span<const double> e, double x);

// Lowest k eigenvalues, ascending, by bisection on the Sturm count. Each
// eigenvalue is an independent bisection; they run across OpenMP threads.
std::vector<double> lowest_eigenvalues(std::span<const double> d, std::span<const double> e, int k);

// Same bisection without threading.
std::vector<double> lowest_eigenvalues_serial(std::span<const double> d, std::span<const double> e,
                                              int k);

// All eigenvalues, ascending, by implicit QL with Wilkinson shifts. Serial
// reference kept for cross-checking the bisection kernel; O(n^2).
std::vector<double> eigenvalues_ql(std::span<const double> d, std::span<const double> e);

}  // namespace qshape::tridiag
