#include "kschur/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kschur/boundary.hpp"
#include "kschur/error.hpp"

namespace kschur {

void check_initial_rows(const std::vector<int>& rows, int k) {
  if (rows.empty()) throw DomainError("row set must be nonempty");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1 || rows[i] > k) throw DomainError("row labels must lie in 1..k");
    if (i > 0 && rows[i] <= rows[i - 1]) throw DomainError("row labels must be strictly increasing");
  }
}

Partition initial_minor_partition(const std::vector<int>& rows) {
  const int a = static_cast<int>(rows.size());
  std::vector<int> parts(a);
  for (int m = 0; m < a; ++m) parts[a - 1 - m] = rows[m] - m;
  return Partition(std::move(parts));
}

std::vector<std::vector<int>> initial_row_sets(int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) rows.push_back(i + 1);
    out.push_back(std::move(rows));
  }
  return out;
}

bool is_totally_positive(const std::vector<double>& h, double tol) {
  for (const auto& rows : initial_row_sets(static_cast<int>(h.size())))
    if (!(initial_minor(h, rows) > tol)) return false;
  return true;
}

namespace {

// Calls visit(rows, cols) for every pair of equal-size index subsets.
template <class Visit>
bool all_minors(std::size_t n, Visit visit) {
  for (std::uint32_t rmask = 1; rmask < (1u << n); ++rmask)
    for (std::uint32_t cmask = 1; cmask < (1u << n); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < n; ++i) {
        if (rmask & (1u << i)) rows.push_back(i);
        if (cmask & (1u << i)) cols.push_back(i);
      }
      if (!visit(rows, cols)) return false;
    }
  return true;
}

}  // namespace

bool brute_force_totally_positive(const std::vector<double>& h, double tol) {
  const Matrix<double> m = toeplitz_matrix(h);
  return all_minors(m.rows(), [&](const auto& rows, const auto& cols) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] < cols[i]) return true;  // forced zero
    return determinant(m.submatrix(rows, cols)) > tol;
  });
}

bool brute_force_totally_nonnegative(const std::vector<double>& h, double tol) {
  const Matrix<double> m = toeplitz_matrix(h);
  return all_minors(m.rows(), [&](const auto& rows, const auto& cols) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] < cols[i]) return true;  // exactly zero; round-off only adds noise
    return determinant(m.submatrix(rows, cols)) >= -tol;
  });
}

bool is_totally_nonnegative(const std::vector<double>& h, double tol, std::uint64_t seed) {
  const std::size_t n = h.size() + 1;
  if (n <= 6) return brute_force_totally_nonnegative(h, tol);
  const Matrix<double> m = toeplitz_matrix(h);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t size = 1 + rng() % n;
    std::vector<std::size_t> rows = idx;
    std::vector<std::size_t> cols = idx;
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    rows.resize(size);
    cols.resize(size);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (determinant(m.submatrix(rows, cols)) < -tol) return false;
  }
  return in_v_bar_by_eigen(static_cast<int>(h.size()), h, std::max(tol, 1e-8));
}

Reconstruction rietsch_reconstruct(int k, const std::vector<double>& r, double tol) {
  const FResult f = f_map(k, r);
  Reconstruction out;
  out.h = f.h;
  for (int a = 1; a <= k; ++a) {
    std::vector<int> rows;
    for (int i = k - a + 1; i <= k; ++i) rows.push_back(i);
    const double minor = initial_minor(out.h, rows);
    out.rectangle_minors.push_back(minor);
    out.max_error = std::max(out.max_error, std::abs(minor - r[a - 1]) / std::max(1.0, std::abs(r[a - 1])));
  }
  const double allowed = f.extrapolated ? std::max(tol, 10 * f.error_estimate) : tol;
  if (out.max_error > allowed)
    throw NumericError("reconstructed rectangle minors miss r by " + std::to_string(out.max_error));
  return out;
}

}  // namespace kschur
