#pragma once

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "kschur/matrix.hpp"
#include "kschur/multipoly.hpp"
#include "kschur/rational.hpp"

namespace kschur {

/// Berkowitz: returns c with det(xI - M) = c[0] x^n + c[1] x^{n-1} + ... + c[n],
/// c[0] = 1. Uses ring operations only.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& m) {
  if (!m.square()) throw DomainError("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {T(1)};
  std::vector<T> vec{T(1), -m(n - 1, n - 1)};
  for (std::size_t i = n - 1; i-- > 0;) {
    // M restricted to rows/cols i..n-1 is [[a, R], [C, A1]] with A1 of size s.
    const std::size_t s = n - 1 - i;
    std::vector<T> col{T(1), -m(i, i)};
    std::vector<T> power(s);  // A1^j C
    for (std::size_t r = 0; r < s; ++r) power[r] = m(i + 1 + r, i);
    for (std::size_t j = 0; j < s; ++j) {
      T dot(0);
      for (std::size_t r = 0; r < s; ++r) dot += m(i, i + 1 + r) * power[r];
      col.push_back(-dot);
      if (j + 1 == s) break;
      std::vector<T> next(s, T(0));
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) {
          const T& a = m(i + 1 + r, i + 1 + c);
          if (a == T(0)) continue;
          next[r] += a * power[c];
        }
      power = std::move(next);
    }
    std::vector<T> out(s + 2, T(0));
    for (std::size_t r = 0; r < s + 2; ++r)
      for (std::size_t c = 0; c <= std::min(r, s); ++c) out[r] += col[r - c] * vec[c];
    vec = std::move(out);
  }
  return vec;
}

/// det(T·I - M) for a matrix of polynomials in r_1..r_k.
UniPoly char_poly(const Matrix<MultiPoly>& m);

struct AdjugateResult {
  MultiPoly det;
  Matrix<MultiPoly> adj;
};

/// Determinant and adjugate via Cayley–Hamilton; M·adj = det·I is checked.
AdjugateResult adjugate_inverse(const Matrix<MultiPoly>& m);

/// Solves M x = b for M unitriangular (ones on the diagonal, and either
/// upper or lower triangular). Throws DomainError otherwise.
std::vector<Rational> solve_unitriangular(const Matrix<Rational>& m, const std::vector<Rational>& b);

/// Determinant by Gaussian elimination. Exact pivots for Rational, partial
/// pivoting for double.
template <class T>
T determinant(Matrix<T> a) {
  if (!a.square()) throw DomainError("determinant needs a square matrix");
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    if constexpr (std::is_floating_point_v<T>) {
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
    } else {
      while (pivot < n && a(pivot, c) == T(0)) ++pivot;
      if (pivot == n) return T(0);
    }
    if (a(pivot, c) == T(0)) return T(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == T(0)) continue;
      const T f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace kschur
