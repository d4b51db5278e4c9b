#include "kschur/linalg.hpp"

namespace kschur {

UniPoly char_poly(const Matrix<MultiPoly>& m) {
  std::vector<MultiPoly> c = berkowitz(m);
  std::reverse(c.begin(), c.end());  // constant term first
  return UniPoly(std::move(c));
}

AdjugateResult adjugate_inverse(const Matrix<MultiPoly>& m) {
  const std::vector<MultiPoly> c = berkowitz(m);
  const std::size_t n = m.rows();
  AdjugateResult out;
  if (n == 0) {
    out.det = MultiPoly(1);
    return out;
  }
  // p(M) = 0 gives M (M^{n-1} + c1 M^{n-2} + ... + c_{n-1}) = -c_n I.
  Matrix<MultiPoly> acc = Matrix<MultiPoly>::identity(n);
  for (std::size_t i = 1; i < n; ++i) {
    acc = m * acc;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += c[i];
  }
  const bool odd = (n % 2) == 1;
  out.det = odd ? -c[n] : c[n];
  out.adj = odd ? acc : acc.scaled(MultiPoly(-1));
  const Matrix<MultiPoly> check = m * out.adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (check(i, j) != (i == j ? out.det : MultiPoly())) throw InternalError("M·adj(M) != det(M)·I");
  return out;
}

std::vector<Rational> solve_unitriangular(const Matrix<Rational>& m, const std::vector<Rational>& b) {
  if (!m.square() || m.rows() != b.size()) throw DomainError("shape mismatch in unitriangular solve");
  const std::size_t n = m.rows();
  bool lower = true;
  bool upper = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 1) throw DomainError("matrix is not unitriangular (diagonal entry != 1)");
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i && m(i, j) != 0) lower = false;
      if (j < i && m(i, j) != 0) upper = false;
    }
  }
  if (!lower && !upper) throw DomainError("matrix is not triangular");
  std::vector<Rational> x(n);
  if (upper) {
    for (std::size_t i = n; i-- > 0;) {
      Rational s = b[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
      x[i] = s;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = b[i];
      for (std::size_t j = 0; j < i; ++j) s -= m(i, j) * x[j];
      x[i] = s;
    }
  }
  return x;
}

}  // namespace kschur
