#include "kschur/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include <Eigen/Sparse>

#include "kschur/affine.hpp"
#include "kschur/error.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

namespace {

// Read-mostly cache of per-level objects.
template <class T, class Build>
const T& per_level(int k, Build build) {
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<T>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<T>(build(k));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(k, std::move(value));
  return *it->second;
}

const UniPoly& cached_xi(int k) {
  return per_level<UniPoly>(k, [](int level) { return char_poly(cached_phi(level).entries); });
}

void check_r(int k, const std::vector<double>& r) {
  if (k < 1) throw DomainError("level k must be at least 1");
  if (static_cast<int>(r.size()) != k) throw DomainError("expected " + std::to_string(k) + " values of r");
  for (double x : r)
    if (!std::isfinite(x) || x < 0) throw DomainError("r must be finite and nonnegative");
}

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Value at 0 of the interpolating polynomial through (eps[i], vals[i]).
double extrapolate_to_zero(const std::vector<double>& eps, const std::vector<double>& vals) {
  double total = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    double w = 1;
    for (std::size_t j = 0; j < eps.size(); ++j)
      if (j != i) w *= (0 - eps[j]) / (eps[i] - eps[j]);
    total += w * vals[i];
  }
  return total;
}

const std::vector<double> kEpsilons{1e-4, 1e-5, 1e-6};

// Quadratic extrapolation plus |quadratic - linear| as the error estimate.
std::pair<double, double> limit_at_zero(const std::vector<double>& vals) {
  const double quad = extrapolate_to_zero(kEpsilons, vals);
  const double lin = extrapolate_to_zero({kEpsilons[1], kEpsilons[2]}, {vals[1], vals[2]});
  return {quad, std::abs(quad - lin)};
}

}  // namespace

const TransferMatrix& cached_phi(int k) {
  return per_level<TransferMatrix>(k, [](int level) { return build_phi(level); });
}

const std::vector<std::size_t>& cached_psi(int k) {
  return per_level<std::vector<std::size_t>>(k, [](int level) { return psi_permutation(cached_phi(level).basis); });
}

const PrimitiveData& cached_primitive(int k) {
  if (k > kDefaultSymbolicLimit) primitive_data(k);  // raises CapabilityError
  return per_level<PrimitiveData>(k, [](int level) { return primitive_data(level); });
}

// ---------------------------------------------------------------------------

PerronResult perron(const Eigen::MatrixXd& a, double tol, int max_iter) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("perron needs a nonempty square matrix");
  if (!graph_irreducible(a)) throw DomainError("matrix is not irreducible");
  const Eigen::Index n = a.rows();
  const Eigen::SparseMatrix<double> shifted =
      (a + Eigen::MatrixXd::Identity(n, n)).sparseView();

  PerronResult res;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  constexpr int kWindow = 100;
  double window_change = 0;
  bool converged = false;
  for (int it = 1; it <= max_iter; ++it) {
    Eigen::VectorXd y = shifted * x;
    y /= y(0);
    const double change = inf_norm(y - x);
    x = std::move(y);
    res.iterations = it;
    if (change < tol * std::max(1.0, inf_norm(x))) {
      converged = true;
      break;
    }
    // Every kWindow steps, estimate the contraction rate and give up on
    // power iteration if the remaining budget cannot reach tol.
    if (it % kWindow == 0) {
      if (window_change > 0) {
        const double rate = std::pow(change / window_change, 1.0 / kWindow);
        if (rate >= 1.0 - 1e-9 || std::log(tol / change) / std::log(rate) > max_iter - it) break;
      }
      window_change = change;
    }
  }
  if (!converged) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) throw NumericError("dense eigensolver failed");
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < n; ++i)
      if (es.eigenvalues()(i).real() > es.eigenvalues()(best).real()) best = i;
    Eigen::VectorXd v = es.eigenvectors().col(best).real();
    if (v.sum() < 0) v = -v;
    if (std::abs(v(0)) < 1e-300) throw NumericError("Perron vector has a vanishing first entry");
    x = v / v(0);
    res.used_dense_start = true;
  }
  double t = x.dot(a * x) / x.dot(x);

  // Newton on A x = t x with x(0) = 1; unknowns are x(1..n-1) and t. Runs
  // until the step stalls at rounding level, not merely until tol is met.
  for (int it = 0; it < 50; ++it) {
    const Eigen::VectorXd residual = a * x - t * x;
    Eigen::MatrixXd jac(n, n);
    jac.leftCols(n - 1) = (a - t * Eigen::MatrixXd::Identity(n, n)).rightCols(n - 1);
    jac.col(n - 1) = -x;
    const Eigen::VectorXd step = jac.partialPivLu().solve(-residual);
    if (!step.allFinite()) break;
    x.tail(n - 1) += step.head(n - 1);
    t += step(n - 1);
    if (inf_norm(step) <= 4e-16 * std::max({1.0, inf_norm(x), std::abs(t)})) break;
  }
  const Eigen::VectorXd residual = a * x - t * x;
  if (inf_norm(residual) > 1e3 * tol * std::max(1.0, std::abs(t)) * std::max(1.0, inf_norm(x)))
    throw NumericError("Perron eigenpair did not converge");
  if (x.minCoeff() < -1e-9 * inf_norm(x) || t < -1e-12)
    throw NumericError("converged to an eigenvector that is not the Perron vector");
  res.t = std::max(t, 0.0);
  res.x = x.cwiseMax(0.0);
  return res;
}

BoundaryPoint boundary_point(int k, const std::vector<double>& r, double tol) {
  check_r(k, r);
  if (!criterion_irreducible(r, k))
    throw DomainError("r lies on the reducible locus; use f_map for the continuous extension");
  const TransferMatrix& phi = cached_phi(k);
  const PerronResult pr = perron(specialize_numeric(phi, r), tol);
  BoundaryPoint p;
  p.k = k;
  p.r = r;
  p.t = pr.t;
  p.x.assign(pr.x.data(), pr.x.data() + pr.x.size());
  p.h.resize(k);
  for (int a = 1; a < k; ++a) p.h[a - 1] = p.x[phi.basis.index_of(Partition{a})];
  p.h[k - 1] = r[0];  // (k) = R_1
  const auto& psi = cached_psi(k);
  for (std::size_t i = 0; i < p.x.size(); ++i) p.nabla += p.x[i] * p.x[psi[i]];
  p.xhat.resize(p.x.size());
  for (std::size_t i = 0; i < p.x.size(); ++i) p.xhat[i] = p.x[psi[i]] / p.nabla;
  return p;
}

double morphism_eval(const BoundaryPoint& point, const Partition& lambda) {
  const RectangleFactorization f = rectangle_factorization(lambda, point.k);
  double value = point.x[cached_phi(point.k).basis.index_of(f.reduced)];
  for (int a = 1; a <= point.k; ++a) value *= std::pow(point.r[a - 1], f.p[a - 1]);
  return value;
}

FResult f_map(int k, const std::vector<double>& r, double tol) {
  check_r(k, r);
  FResult out;
  if (std::all_of(r.begin(), r.end(), [](double x) { return x == 0; })) {
    out.h.assign(k, 0.0);
    return out;
  }
  if (criterion_irreducible(r, k)) {
    out.h = boundary_point(k, r, tol).h;
    return out;
  }
  std::vector<std::vector<double>> samples;
  for (double eps : kEpsilons) {
    std::vector<double> shifted = r;
    for (double& x : shifted) x += eps;
    samples.push_back(boundary_point(k, shifted, tol).h);
  }
  out.extrapolated = true;
  out.h.resize(k);
  for (int a = 0; a < k; ++a) {
    auto [value, err] = limit_at_zero({samples[0][a], samples[1][a], samples[2][a]});
    out.h[a] = value;
    out.error_estimate = std::max(out.error_estimate, err);
  }
  return out;
}

std::vector<double> g_map(int k, const std::vector<double>& h) {
  if (k < 1) throw DomainError("level k must be at least 1");
  if (static_cast<int>(h.size()) != k) throw DomainError("expected " + std::to_string(k) + " values of h");
  std::vector<double> r(k);
  for (int a = 1; a <= k; ++a) r[a - 1] = schur_eval_jacobi_trudi(rectangle(a, k), h);
  return r;
}

int homogeneity_degree(int a, int k) { return rectangle_size(a, k); }

Normalized simplex_normalize(int k, const std::vector<double>& r) {
  check_r(k, r);
  if (std::all_of(r.begin(), r.end(), [](double x) { return x == 0; }))
    throw DomainError("cannot normalize r = 0");
  const auto total = [&](double t) {
    double s = 0;
    for (int a = 1; a <= k; ++a) s += std::pow(t, homogeneity_degree(a, k)) * r[a - 1];
    return s;
  };
  double lo = 0;
  double hi = 1;
  while (total(hi) < 1) hi *= 2;
  while (total(hi / 2) >= 1 && hi > 1e-300) hi /= 2;
  lo = hi / 2;
  for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) < 1 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int i = 0; i < 5; ++i) {
    double d = 0;
    for (int a = 1; a <= k; ++a) {
      const int deg = homogeneity_degree(a, k);
      d += deg * std::pow(t, deg - 1) * r[a - 1];
    }
    if (d <= 0) break;
    const double next = t - (total(t) - 1) / d;
    if (next > 0) t = next;
  }
  Normalized out;
  out.t = t;
  out.r.resize(k);
  for (int a = 1; a <= k; ++a) out.r[a - 1] = std::pow(t, homogeneity_degree(a, k)) * r[a - 1];
  return out;
}

Normalized unit_normalize(int k, const std::vector<double>& r, double tol) {
  check_r(k, r);
  const double t = f_map(k, r, tol).h[0];
  if (!(t > 0)) throw DomainError("Perron eigenvalue is zero; cannot normalize");
  Normalized out;
  out.t = t;
  out.r.resize(k);
  for (int a = 1; a <= k; ++a) out.r[a - 1] = r[a - 1] / std::pow(t, homogeneity_degree(a, k));
  return out;
}

std::vector<double> zeta_coefficients(const BoundaryPoint& point, double tol) {
  if (std::abs(point.t - 1) > tol) throw DomainError("ζ needs a point normalized to t = 1");
  std::vector<double> out{1.0};
  for (int j = 1; j <= point.k; ++j) out.push_back(morphism_eval(point, Partition(std::vector<int>(j, 1))));
  return out;
}

bool region_k3(double h2, double h3) {
  return 0 <= h2 && h2 <= 1 && 0 <= h3 && h3 <= h2 * h2 && 2 * h2 - h3 <= 1;
}

double kschur_value(int k, const Partition& kappa, const std::vector<double>& h) {
  if (static_cast<int>(h.size()) != k) throw DomainError("expected " + std::to_string(k) + " values of h");
  return evaluate_h(kschur_to_h(SymFuncExpr::single(Basis::KSchur, k, kappa)), h);
}

bool in_v_bar(int k, const std::vector<double>& h, double tol) {
  for (int a = 1; a <= k; ++a)
    if (kschur_value(k, rectangle(a, k), h) < -tol) return false;
  for (const Partition& p : cached_phi(k).basis.parts())
    if (kschur_value(k, p, h) < -tol) return false;
  return true;
}

bool in_v_bar_by_eigen(int k, const std::vector<double>& h, double tol) {
  std::vector<double> r = g_map(k, h);
  for (double& x : r) {
    if (x < -tol) return false;
    x = std::max(x, 0.0);
  }
  const std::vector<double> back = f_map(k, r).h;
  for (int a = 0; a < k; ++a)
    if (std::abs(back[a] - h[a]) > tol * std::max(1.0, std::abs(h[a]))) return false;
  return true;
}

std::vector<double> project_pi(int k_plus_1, const std::vector<double>& h, double tol) {
  if (k_plus_1 < 2) throw DomainError("projection needs level at least 2");
  if (!in_v_bar(k_plus_1, h, tol)) throw DomainError("h is not in the closed image at level " + std::to_string(k_plus_1));
  std::vector<double> r = g_map(k_plus_1, h);
  r.pop_back();
  for (double& x : r) x = std::max(x, 0.0);
  return f_map(k_plus_1 - 1, r).h;
}

RationalValue rational_formula(int k, const Partition& kappa, double s, const std::vector<double>& r) {
  check_r(k, r);
  const PrimitiveData& pd = cached_primitive(k);
  const RectangleFactorization f = rectangle_factorization(kappa, k);
  const std::size_t idx = cached_phi(k).basis.index_of(f.reduced);
  const auto evaluate = [&](double sv, const std::vector<double>& rv) {
    double rect = 1;
    for (int a = 1; a <= k; ++a) rect *= std::pow(rv[a - 1], f.p[a - 1]);
    return rect * pd.p[idx].evaluate(sv, rv) / pd.delta.evaluate(rv);
  };
  double scale = 0;
  for (const auto& [m, c] : pd.delta.terms()) scale += std::abs(MultiPoly::monomial(m, abs(c)).evaluate(r));
  RationalValue out;
  if (std::abs(pd.delta.evaluate(r)) > 1e-12 * std::max(scale, 1e-300)) {
    out.value = evaluate(s, r);
    return out;
  }
  // Δ(r) = 0: approach along a direction that is not symmetric under the flip
  // r_a ↔ r_{k+1-a}, following the root of Ξ through s when s is one.
  const UniPoly& xi = cached_xi(k);
  const auto xi_at = [&](double t, const std::vector<double>& rv) { return xi.evaluate(t, rv); };
  const auto dxi_at = [&](double t, const std::vector<double>& rv) {
    double acc = 0;
    for (int i = xi.degree(); i >= 1; --i) acc = acc * t + i * xi.coeff(i).evaluate(rv);
    return acc;
  };
  const bool track_root = std::abs(xi_at(s, r)) <= 1e-8 * std::max(1.0, std::abs(dxi_at(s, r)));
  std::vector<double> vals;
  for (double eps : kEpsilons) {
    std::vector<double> rv = r;
    for (int a = 1; a <= k; ++a) rv[a - 1] += eps * a;
    double sv = s;
    if (track_root)
      for (int i = 0; i < 20; ++i) {
        const double d = dxi_at(sv, rv);
        if (d == 0) break;
        sv -= xi_at(sv, rv) / d;
      }
    vals.push_back(evaluate(sv, rv));
  }
  auto [value, err] = limit_at_zero(vals);
  out.value = value;
  out.limit = true;
  out.error_estimate = err;
  return out;
}

}  // namespace kschur
