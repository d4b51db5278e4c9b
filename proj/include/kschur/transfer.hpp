#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "kschur/lattice.hpp"
#include "kschur/linalg.hpp"
#include "kschur/matrix.hpp"
#include "kschur/multipoly.hpp"

namespace kschur {

/// Largest k for which symbolic char-poly / adjugate run without opt-in.
inline constexpr int kDefaultSymbolicLimit = 3;

/// Multiplication by s_(1) on the irreducible basis over Q[r_1..r_k].
///
/// Row = source λ, column = reduced target ν, so the value vector x with
/// x[λ] = φ(s_λ) satisfies A x = t x. This is the transpose of the matrix
/// usually printed in the literature.
struct TransferMatrix {
  int k = 0;
  IrreducibleBasis basis{1};
  Matrix<MultiPoly> entries;

  /// Same matrix in the printed orientation (row = target).
  Matrix<MultiPoly> printed() const { return entries.transpose(); }
};

TransferMatrix build_phi(int k);

/// Entrywise evaluation at r (nonnegative, length k).
Matrix<Rational> specialize(const TransferMatrix& phi, const std::vector<Rational>& r);
Eigen::MatrixXd specialize_numeric(const TransferMatrix& phi, const std::vector<double>& r);

/// r_a > 0 or r_{a+1} > 0 for every 1 ≤ a ≤ k-1.
bool criterion_irreducible(const std::vector<double>& r, int k);

/// Strong connectivity of the support digraph of a square nonnegative matrix.
bool graph_irreducible(const Eigen::MatrixXd& a);
bool graph_irreducible(const Matrix<Rational>& a);

/// perm[i] = index of ω_k(basis[i]).
std::vector<std::size_t> omega_permutation(const IrreducibleBasis& basis);

/// det(T·I - Φ). Throws CapabilityError for k above `symbolic_limit`.
UniPoly xi_char_poly(int k, int symbolic_limit = kDefaultSymbolicLimit);

struct PrimitiveData {
  int k = 0;
  Matrix<MultiPoly> m;       // column i = coordinates of s_(1)^i
  MultiPoly delta;           // det M
  Matrix<MultiPoly> adj;     // adjugate N, M⁻¹ = N / Δ
  std::vector<UniPoly> p;    // p[κ] with Δ s_κ = P_κ(s_(1)); indexed like the basis
};

PrimitiveData primitive_data(int k, int symbolic_limit = kDefaultSymbolicLimit);

/// Coordinates of s_(1)^n on the irreducible basis (rectangles absorbed in Q[r]).
std::vector<MultiPoly> power_of_s1(const TransferMatrix& phi, int n);

}  // namespace kschur
