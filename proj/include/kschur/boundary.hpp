#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "kschur/partition.hpp"
#include "kschur/transfer.hpp"

namespace kschur {

inline constexpr double kDefaultTol = 1e-12;

/// Shared per-level data (built on first use, then read only).
const TransferMatrix& cached_phi(int k);
const std::vector<std::size_t>& cached_psi(int k);
const PrimitiveData& cached_primitive(int k);

struct PerronResult {
  double t = 0;
  Eigen::VectorXd x;  // x(0) = 1
  int iterations = 0;
  bool used_dense_start = false;
};

/// Dominant eigenpair of an irreducible nonnegative matrix with A x = t x.
/// Power iteration on A + I, then a Newton polish of the eigenpair.
PerronResult perron(const Eigen::MatrixXd& a, double tol = kDefaultTol, int max_iter = 1'000'000);

/// A nonnegative morphism evaluated through the transfer matrix.
struct BoundaryPoint {
  int k = 0;
  std::vector<double> r;
  double t = 0;               // φ(s_(1))
  std::vector<double> h;      // φ(h_1..h_k)
  std::vector<double> x;      // φ(s_λ) on the irreducible basis, x[0] = 1
  std::vector<double> xhat;   // x∘Ψ / ∇
  double nabla = 0;
};

/// Requires criterion_irreducible(r).
BoundaryPoint boundary_point(int k, const std::vector<double>& r, double tol = kDefaultTol);

/// φ(s_λ) = Π r_a^{p_a} X(λ̃).
double morphism_eval(const BoundaryPoint& point, const Partition& lambda);

struct FResult {
  std::vector<double> h;
  bool extrapolated = false;   // r was on the reducible locus
  double error_estimate = 0;   // only meaningful when extrapolated
};

/// (φ(h_1), ..., φ(h_k)); reducible r are handled as a limit along r + ε(1,...,1).
FResult f_map(int k, const std::vector<double>& r, double tol = kDefaultTol);

/// r_a = s_{R_a}(h) through Jacobi–Trudi.
std::vector<double> g_map(int k, const std::vector<double>& h);

/// deg_a = |R_a| = a(k+1-a).
int homogeneity_degree(int a, int k);

struct Normalized {
  double t = 0;
  std::vector<double> r;
};

/// t > 0 with Σ t^{deg_a} r_a = 1, and the rescaled vector (t^{deg_a} r_a).
Normalized simplex_normalize(int k, const std::vector<double>& r);

/// Rescales r so that the Perron eigenvalue becomes 1: r_a / t(r)^{deg_a}.
Normalized unit_normalize(int k, const std::vector<double>& r, double tol = kDefaultTol);

/// (1, E_1, ..., E_{k-1}, r_k) with E_j = φ(e_j); requires t = 1.
std::vector<double> zeta_coefficients(const BoundaryPoint& point, double tol = 1e-9);

/// 0 ≤ h2 ≤ 1, 0 ≤ h3 ≤ h2², 2h2 - h3 ≤ 1.
bool region_k3(double h2, double h3);

/// Every k-Schur function is ≥ -tol at h (rectangles and irreducibles suffice).
bool in_v_bar(int k, const std::vector<double>& h, double tol = 1e-12);

/// Eigen route: g(h) ≥ -tol and f(g(h)) = h within tol.
bool in_v_bar_by_eigen(int k, const std::vector<double>& h, double tol = 1e-8);

/// φ(s_κ^{(k)}) at the level-k morphism with coordinates h (any h, no positivity needed).
double kschur_value(int k, const Partition& kappa, const std::vector<double>& h);

/// h at level k+1 ↦ f_k(r_1..r_k) where r = g_{k+1}(h).
std::vector<double> project_pi(int k_plus_1, const std::vector<double>& h, double tol = 1e-9);

struct RationalValue {
  double value = 0;
  bool limit = false;  // Δ(r) = 0, computed as a limit
  double error_estimate = 0;
};

/// Π r_a^{p_a} P_κ̃(s; r) / Δ(r).
RationalValue rational_formula(int k, const Partition& kappa, double s, const std::vector<double>& r);

}  // namespace kschur
