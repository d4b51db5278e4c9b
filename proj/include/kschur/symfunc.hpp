#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "kschur/linalg.hpp"
#include "kschur/matrix.hpp"
#include "kschur/partition.hpp"
#include "kschur/rational.hpp"

namespace kschur {

enum class Basis { H, KSchur, Schur };

/// Finite linear combination of basis functions indexed by partitions.
/// For KSchur, `k` is the level; for H and Schur it is informational.
struct SymFuncExpr {
  Basis basis = Basis::H;
  int k = 0;
  std::map<Partition, Rational> coeffs;  // zero coefficients are never stored

  SymFuncExpr() = default;
  SymFuncExpr(Basis b, int level) : basis(b), k(level) {}
  static SymFuncExpr single(Basis b, int level, const Partition& p, const Rational& c = 1);

  void add(const Partition& p, const Rational& c);
  void add(const SymFuncExpr& other, const Rational& scale = 1);
  Rational coeff(const Partition& p) const;
  bool operator==(const SymFuncExpr& o) const = default;

  bool all_nonnegative_integers() const;
  /// e.g. "2*h(2,1) - h(1,1,1)"; "0" when empty.
  std::string str() const;
  nlohmann::json to_json() const;
};

std::string basis_name(Basis b, int k);

/// Number of sequences ∅ = λ⁰ ⊂ λ¹ ⊂ ... ⊂ λ^d = λ with λ^i/λ^{i-1} a weak
/// horizontal strip of size α_i. Zero entries of α are allowed.
long long count_k_tableaux(const Partition& lambda, const std::vector<int>& alpha, int k);

/// Number of semistandard tableaux of shape λ and content α.
long long count_ssyt(const Partition& lambda, const std::vector<int>& alpha);

/// K(λ, α) for all partitions λ, α of one degree, indexed in lexicographically
/// decreasing order, together with the inverse change of basis.
struct KostkaTable {
  int k = 0;  // 0 marks the ordinary (Schur) table
  int degree = 0;
  std::vector<Partition> basis;
  std::unordered_map<Partition, std::size_t, PartitionHash> index;
  Matrix<Rational> kostka;   // kostka(λ, α)
  Matrix<Rational> s_in_h;   // s_λ = Σ_α s_in_h(λ, α) h_α

  std::size_t index_of(const Partition& p) const;
};

/// k-Kostka table of degree n; built once and cached (thread safe).
const KostkaTable& kostka_table(int k, int n);
/// Ordinary Kostka table of degree n; built once and cached.
const KostkaTable& schur_kostka_table(int n);

SymFuncExpr h_to_kschur(const SymFuncExpr& expr, int k);
SymFuncExpr kschur_to_h(const SymFuncExpr& expr);
SymFuncExpr h_to_schur(const SymFuncExpr& expr);
SymFuncExpr schur_to_h(const SymFuncExpr& expr);

/// Product in the h basis (h_μ h_ν = h_{μ∪ν}).
SymFuncExpr h_product(const SymFuncExpr& a, const SymFuncExpr& b);

/// h_r · s_κ^{(k)} as the sum over weak horizontal strips.
SymFuncExpr pieri(int r, const Partition& kappa, int k);

/// s_κ^{(k)} s_δ^{(k)} in the k-Schur basis.
SymFuncExpr kschur_product(const Partition& kappa, const Partition& delta, int k);

/// s_κ^{(k)} in the Schur basis; coefficients must be nonnegative integers.
SymFuncExpr kschur_to_schur(const Partition& kappa, int k);

/// s_κ^{(k)} in the (k+1)-Schur basis; coefficients must be nonnegative integers.
SymFuncExpr kschur_lift(const Partition& kappa, int k);

/// det(h_{λ_i - i + j}) with h_0 = 1 and h_m = 0 for m < 0 or m > h.size().
template <class T>
T schur_eval_jacobi_trudi(const Partition& lambda, const std::vector<T>& h) {
  const std::size_t n = lambda.length();
  if (n == 0) return T(1);
  const auto hm = [&](int m) -> T {
    if (m == 0) return T(1);
    if (m < 0 || m > static_cast<int>(h.size())) return T(0);
    return h[m - 1];
  };
  Matrix<T> jt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      jt(i, j) = hm(lambda[i] - static_cast<int>(i) + static_cast<int>(j));
  return determinant(std::move(jt));
}

/// Σ c_μ Π h_{μ_i} for an expression in the h basis.
template <class T>
T evaluate_h(const SymFuncExpr& expr, const std::vector<T>& h) {
  if (expr.basis != Basis::H) throw DomainError("evaluate_h expects an expression in the h basis");
  T total(0);
  for (const auto& [mu, c] : expr.coeffs) {
    T term(1);
    for (int part : mu.parts()) {
      if (part > static_cast<int>(h.size())) throw DomainError("h index beyond supplied values");
      term *= h[part - 1];
    }
    if constexpr (std::is_same_v<T, double>)
      total += c.get_d() * term;
    else
      total += T(c) * term;
  }
  return total;
}

}  // namespace kschur
