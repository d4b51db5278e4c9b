#include "kschur/transfer.hpp"

#include "kschur/error.hpp"

namespace kschur {

TransferMatrix build_phi(int k) {
  TransferMatrix phi;
  phi.k = k;
  phi.basis = IrreducibleBasis(k);
  const std::size_t n = phi.basis.size();
  phi.entries = Matrix<MultiPoly>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const CoverEdge& e : covers(phi.basis[i], k)) {
      const RectangleFactorization f = rectangle_factorization(e.target, k);
      MultiPoly weight(1);
      int created = 0;
      for (int a = 1; a <= k; ++a) {
        if (f.p[a - 1] == 0) continue;
        if (f.p[a - 1] != 1 || ++created > 1)
          throw InternalError("one box created more than one rectangle at " + e.target.str());
        weight = MultiPoly::variable(a);
      }
      phi.entries(i, phi.basis.index_of(f.reduced)) += weight;
    }
  }
  return phi;
}

Matrix<Rational> specialize(const TransferMatrix& phi, const std::vector<Rational>& r) {
  if (static_cast<int>(r.size()) != phi.k) throw DomainError("expected " + std::to_string(phi.k) + " values of r");
  for (const auto& x : r)
    if (x < 0) throw DomainError("r must be nonnegative");
  const std::size_t n = phi.entries.rows();
  Matrix<Rational> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = phi.entries(i, j).evaluate(r);
  return out;
}

Eigen::MatrixXd specialize_numeric(const TransferMatrix& phi, const std::vector<double>& r) {
  if (static_cast<int>(r.size()) != phi.k) throw DomainError("expected " + std::to_string(phi.k) + " values of r");
  for (double x : r)
    if (!(x >= 0)) throw DomainError("r must be nonnegative");
  const std::size_t n = phi.entries.rows();
  Eigen::MatrixXd out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = phi.entries(i, j).evaluate(r);
  return out;
}

bool criterion_irreducible(const std::vector<double>& r, int k) {
  if (static_cast<int>(r.size()) != k) throw DomainError("expected " + std::to_string(k) + " values of r");
  for (double x : r)
    if (!(x >= 0)) throw DomainError("r must be nonnegative");
  for (int a = 1; a <= k - 1; ++a)
    if (r[a - 1] <= 0 && r[a] <= 0) return false;
  return true;
}

namespace {

bool strongly_connected(std::size_t n, const std::vector<std::vector<std::size_t>>& out_edges) {
  if (n == 0) return true;
  const auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n;
  };
  std::vector<std::vector<std::size_t>> in_edges(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : out_edges[v]) in_edges[w].push_back(v);
  return reaches_all(out_edges) && reaches_all(in_edges);
}

}  // namespace

bool graph_irreducible(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw DomainError("square matrix expected");
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) < 0) throw DomainError("matrix has a negative entry");
      if (a(i, j) > 0) adj[i].push_back(j);
    }
  return strongly_connected(n, adj);
}

bool graph_irreducible(const Matrix<Rational>& a) {
  if (!a.square()) throw DomainError("square matrix expected");
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) < 0) throw DomainError("matrix has a negative entry");
      if (a(i, j) > 0) adj[i].push_back(j);
    }
  return strongly_connected(n, adj);
}

std::vector<std::size_t> omega_permutation(const IrreducibleBasis& basis) {
  std::vector<std::size_t> perm(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Partition image = omega_conjugate(basis[i], basis.k());
    if (!is_irreducible(image, basis.k()))
      throw InternalError("k-conjugation sends irreducible " + basis[i].str() + " to " + image.str());
    perm[i] = basis.index_of(image);
  }
  return perm;
}

namespace {

void check_symbolic_limit(int k, int limit) {
  if (k < 1) throw DomainError("level k must be at least 1");
  if (k > limit)
    throw CapabilityError("symbolic computation at k=" + std::to_string(k) + " exceeds the limit " +
                          std::to_string(limit) + "; raise the limit or use a numeric specialization");
}

}  // namespace

UniPoly xi_char_poly(int k, int symbolic_limit) {
  check_symbolic_limit(k, symbolic_limit);
  return char_poly(build_phi(k).entries);
}

std::vector<MultiPoly> power_of_s1(const TransferMatrix& phi, int n) {
  const std::size_t size = phi.basis.size();
  std::vector<MultiPoly> v(size);
  v[0] = MultiPoly(1);  // s_∅ comes first in the basis
  const Matrix<MultiPoly> at = phi.entries.transpose();
  for (int i = 0; i < n; ++i) v = at * v;
  return v;
}

PrimitiveData primitive_data(int k, int symbolic_limit) {
  check_symbolic_limit(k, symbolic_limit);
  const TransferMatrix phi = build_phi(k);
  const std::size_t n = phi.basis.size();
  PrimitiveData out;
  out.k = k;
  out.m = Matrix<MultiPoly>(n, n);
  const Matrix<MultiPoly> at = phi.entries.transpose();
  std::vector<MultiPoly> col(n);
  col[0] = MultiPoly(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) out.m(r, i) = col[r];
    col = at * col;
  }
  AdjugateResult inv = adjugate_inverse(out.m);
  out.delta = std::move(inv.det);
  out.adj = std::move(inv.adj);
  // s_(1)^i = Σ_κ M(κ, i) s_κ, hence Δ s_κ = Σ_i N(i, κ) s_(1)^i.
  for (std::size_t kappa = 0; kappa < n; ++kappa) {
    std::vector<MultiPoly> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = out.adj(i, kappa);
    out.p.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace kschur
