#include <doctest.h>

#include <random>

#include "kschur/error.hpp"
#include "kschur/transfer.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

const MultiPoly r1 = MultiPoly::variable(1);
const MultiPoly r2 = MultiPoly::variable(2);
const MultiPoly r3 = MultiPoly::variable(3);

Matrix<MultiPoly> from_rows(const std::vector<std::vector<MultiPoly>>& rows) {
  Matrix<MultiPoly> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<MultiPoly> reversed_vars(int k) {
  std::vector<MultiPoly> v;
  for (int a = k; a >= 1; --a) v.push_back(MultiPoly::variable(a));
  return v;
}

Matrix<MultiPoly> substitute(const Matrix<MultiPoly>& m, const std::vector<MultiPoly>& subs) {
  Matrix<MultiPoly> out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(subs);
  return out;
}

}  // namespace

TEST_CASE("transfer matrix for k=2 and k=3 in printed orientation") {
  CHECK(build_phi(2).printed() == from_rows({{0, r1 + r2}, {1, 0}}));
  CHECK(build_phi(3).printed() == from_rows({{0, 0, r1, r3, r2, 0},
                                             {1, 0, 0, 0, 0, r2},
                                             {0, 1, 0, 0, 0, r3},
                                             {0, 1, 0, 0, 0, r1},
                                             {0, 0, 1, 1, 0, 0},
                                             {0, 0, 0, 0, 1, 0}}));
  CHECK(build_phi(1).entries == from_rows({{r1}}));
}

TEST_CASE("specialization") {
  for (int k = 1; k <= 4; ++k) {
    const TransferMatrix phi = build_phi(k);
    const Matrix<Rational> zero = specialize(phi, std::vector<Rational>(k, 0));
    for (std::size_t i = 0; i < phi.basis.size(); ++i) {
      std::vector<Rational> row(phi.basis.size(), 0);
      for (const auto& e : covers(phi.basis[i], k))
        if (is_irreducible(e.target, k)) row[phi.basis.index_of(e.target)] += 1;
      for (std::size_t j = 0; j < row.size(); ++j) CHECK(zero(i, j) == row[j]);
    }
  }
  const Matrix<Rational> ones = specialize(build_phi(3), {1, 1, 1});
  const Matrix<Rational> printed = ones.transpose();
  CHECK(printed(0, 2) == 1);
  CHECK(printed(0, 3) == 1);
  CHECK(printed(0, 4) == 1);
  CHECK(printed(1, 5) == 1);
  CHECK(printed(4, 2) == 1);
  CHECK_THROWS_AS(specialize(build_phi(3), {1, 1}), DomainError);
  CHECK_THROWS_AS(specialize(build_phi(2), {1, -1}), DomainError);
}

TEST_CASE("characteristic polynomial") {
  CHECK(xi_char_poly(2) == UniPoly({-(r1 + r2), MultiPoly(0), MultiPoly(1)}));
  const UniPoly xi3 = xi_char_poly(3);
  CHECK(xi3 == UniPoly({(r1 - r3).pow(2), MultiPoly(0), MultiPoly(-4) * r2, MultiPoly(-2) * (r1 + r3), MultiPoly(0),
                        MultiPoly(0), MultiPoly(1)}));
  CHECK(xi3.str() == "T^6 + (-2*r1 - 2*r3)*T^3 - 4*r2*T^2 + (r1^2 - 2*r1*r3 + r3^2)");
  CHECK_THROWS_AS(xi_char_poly(4), CapabilityError);

  // Specializing first and expanding det(T - Φ(r)) by cofactors gives the same values.
  std::mt19937_64 rng(17);
  for (int k = 2; k <= 3; ++k) {
    const TransferMatrix phi = build_phi(k);
    const UniPoly xi = xi_char_poly(k);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> r(k);
      for (auto& x : r) x = abs(oracle::random_rational(rng, 5, 3));
      const Matrix<Rational> a = specialize(phi, r);
      const Rational t = oracle::random_rational(rng, 4, 3);
      const Matrix<Rational> shifted = Matrix<Rational>::identity(a.rows()).scaled(t) - a;
      CHECK(xi.evaluate(t, r) == oracle::cofactor_det(shifted));
    }
  }
}

TEST_CASE("irreducibility criterion matches strong connectivity") {
  CHECK(criterion_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(criterion_irreducible({1, 0, 0}, 3));
  Eigen::MatrixXd one(1, 1);
  one << 2.0;
  CHECK(graph_irreducible(one));
  CHECK_FALSE(graph_irreducible(specialize(build_phi(2), {0, 0})));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int k = 1; k <= 4; ++k) {
    const TransferMatrix phi = build_phi(k);
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<double> r(k);
      for (int a = 0; a < k; ++a) r[a] = (mask >> a) & 1 ? u(rng) : 0.0;
      const Eigen::MatrixXd a = specialize_numeric(phi, r);
      std::vector<std::vector<bool>> adj(a.rows(), std::vector<bool>(a.cols()));
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) adj[i][j] = a(i, j) > 0;
      const bool expected = oracle::strongly_connected(adj);
      CHECK(criterion_irreducible(r, k) == expected);
      CHECK(graph_irreducible(a) == expected);
    }
  }
}

TEST_CASE("omega symmetry of the transfer matrix") {
  const IrreducibleBasis b2(2);
  CHECK(omega_permutation(b2) == std::vector<std::size_t>{0, 1});
  const IrreducibleBasis b3(3);
  CHECK(omega_permutation(b3) == std::vector<std::size_t>{0, 1, 3, 2, 4, 5});
  for (int k = 1; k <= 4; ++k) {
    const TransferMatrix phi = build_phi(k);
    const auto omega = omega_permutation(phi.basis);
    CHECK(phi.entries.permuted(omega) == substitute(phi.entries, reversed_vars(k)));
  }
}

TEST_CASE("primitive element data for k=3") {
  const PrimitiveData pd = primitive_data(3);
  CHECK(pd.m == from_rows({{1, 0, 0, r1 + r3, 2 * r2, 0},
                           {0, 1, 0, 0, r1 + r3, 4 * r2},
                           {0, 0, 1, 0, 0, r1 + 3 * r3},
                           {0, 0, 1, 0, 0, 3 * r1 + r3},
                           {0, 0, 0, 2, 0, 0},
                           {0, 0, 0, 0, 2, 0}}));
  CHECK(pd.delta == oracle::cofactor_det(pd.m));

  // Printed inverse, entry = numerator / denominator.
  struct Entry {
    int i, j;
    MultiPoly num, den;
  };
  const std::vector<Entry> inverse{
      {0, 0, 1, 1},
      {0, 4, -(r1 + r3), 2},
      {0, 5, -r2, 1},
      {1, 1, 1, 1},
      {1, 2, 2 * r2, r1 - r3},
      {1, 3, 2 * r2, r3 - r1},
      {1, 5, -(r1 + r3), 2},
      {2, 2, 3 * r1 + r3, 2 * r1 - 2 * r3},
      {2, 3, r1 + 3 * r3, 2 * r3 - 2 * r1},
      {3, 4, 1, 2},
      {4, 5, 1, 2},
      {5, 2, -1, 2 * r1 - 2 * r3},
      {5, 3, -1, 2 * r3 - 2 * r1},
  };
  std::vector<std::vector<bool>> listed(6, std::vector<bool>(6, false));
  for (const auto& e : inverse) {
    CHECK(pd.adj(e.i, e.j) * e.den == e.num * pd.delta);
    listed[e.i][e.j] = true;
  }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (!listed[i][j]) CHECK(pd.adj(i, j).is_zero());

  // s_(2,1,1) = ½ s⁴ − ½(r1+r3) s − r2
  const std::size_t top = IrreducibleBasis(3).index_of(Partition{2, 1, 1});
  const MultiPoly half(Rational(1, 2));
  const UniPoly expected({-r2 * pd.delta, -(half * (r1 + r3)) * pd.delta, 0, 0, half * pd.delta});
  CHECK(pd.p[top] == expected);
}

TEST_CASE("primitive data for k=2 and powers of s_(1)") {
  const PrimitiveData pd = primitive_data(2);
  CHECK(pd.m == Matrix<MultiPoly>::identity(2));
  CHECK(pd.delta == MultiPoly(1));
  const TransferMatrix phi = build_phi(2);
  CHECK(power_of_s1(phi, 2) == std::vector<MultiPoly>{r1 + r2, 0});
  CHECK(power_of_s1(phi, 3) == std::vector<MultiPoly>{0, r1 + r2});
  CHECK_THROWS_AS(primitive_data(4), CapabilityError);
}
