#pragma once

#include <cstdint>
#include <vector>

#include "kschur/linalg.hpp"
#include "kschur/matrix.hpp"
#include "kschur/partition.hpp"

namespace kschur {

/// (k+1)×(k+1) lower unitriangular Toeplitz matrix with entry(i, j) = h_{i-j},
/// h_0 = 1 and h_m = 0 for m < 0. h holds h_1..h_k.
template <class T>
Matrix<T> toeplitz_matrix(const std::vector<T>& h) {
  const std::size_t n = h.size() + 1;
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = T(1);
    for (std::size_t j = 0; j < i; ++j) m(i, j) = h[i - j - 1];
  }
  return m;
}

/// Checks that rows is strictly increasing inside {1..k}.
void check_initial_rows(const std::vector<int>& rows, int k);

/// Row label i is the 0-indexed matrix row i (its first entry is h_i).
/// Determinant of rows L and the first |L| columns.
template <class T>
T initial_minor(const std::vector<T>& h, const std::vector<int>& rows) {
  check_initial_rows(rows, static_cast<int>(h.size()));
  const Matrix<T> m = toeplitz_matrix(h);
  std::vector<std::size_t> r(rows.begin(), rows.end());
  std::vector<std::size_t> c(rows.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = j;
  return determinant(m.submatrix(r, c));
}

/// The partition (i_a - a + 1, ..., i_2 - 1, i_1) whose Schur function the
/// initial minor on rows i_1 < ... < i_a equals.
Partition initial_minor_partition(const std::vector<int>& rows);

/// All 2^k - 1 nonempty row sets, in increasing bitmask order.
std::vector<std::vector<int>> initial_row_sets(int k);

/// Every initial minor > tol.
bool is_totally_positive(const std::vector<double>& h, double tol = 0);

/// Every minor with i_m ≥ j_m for all m (the ones not forced to vanish) > tol.
bool brute_force_totally_positive(const std::vector<double>& h, double tol = 0);

/// Every minor ≥ -tol, by exhaustion.
bool brute_force_totally_nonnegative(const std::vector<double>& h, double tol = 0);

/// Exhaustive for k+1 ≤ 6. Larger sizes: a randomized hunt for a negative
/// minor, then the certificate g(h) ≥ 0 with f(g(h)) = h.
bool is_totally_nonnegative(const std::vector<double>& h, double tol = 1e-12, std::uint64_t seed = 1);

struct Reconstruction {
  std::vector<double> h;
  std::vector<double> rectangle_minors;  // minor on rows {k-a+1..k}, a = 1..k
  double max_error = 0;
};

/// Toeplitz matrix from r: h = f(r), with the rectangle minors checked against r.
Reconstruction rietsch_reconstruct(int k, const std::vector<double>& r, double tol = 1e-9);

}  // namespace kschur
