#include <doctest.h>

#include <random>

#include "kschur/error.hpp"
#include "kschur/linalg.hpp"
#include "kschur/multipoly.hpp"
#include "kschur/rational.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

const MultiPoly r1 = MultiPoly::variable(1);
const MultiPoly r2 = MultiPoly::variable(2);
const MultiPoly r3 = MultiPoly::variable(3);

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::random_rational(rng, 9, 4);
  return m;
}

Matrix<MultiPoly> lift(const Matrix<Rational>& m) {
  Matrix<MultiPoly> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly(m(i, j));
  return out;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational_list("1, 1/2,0.3") == std::vector<Rational>{1, Rational(1, 2), Rational(3, 10)});
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(from_double(0.1) == Rational(mpz_class("3602879701896397"), mpz_class("36028797018963968")));
  CHECK(from_double(-2.5) == Rational(-5, 2));
}

TEST_CASE("polynomial arithmetic and printing") {
  const MultiPoly p = (r1 + r2).pow(2);
  CHECK(p == r1 * r1 + Rational(2) * r1 * r2 + r2 * r2);
  CHECK(p.str() == "r1^2 + 2*r1*r2 + r2^2");
  CHECK((r1 - r3).pow(2).str() == "r1^2 - 2*r1*r3 + r3^2");
  CHECK((Rational(1, 2) * r2 - 3).str() == "1/2*r2 - 3");
  CHECK(MultiPoly().str() == "0");
  CHECK(p.total_degree() == 2);
  CHECK(MultiPoly().total_degree() == -1);
  CHECK((r1 - r1).is_zero());
  CHECK(p.evaluate(std::vector<Rational>{1, 2}) == 9);
  CHECK(p.evaluate(std::vector<double>{0.5, 0.25}) == doctest::Approx(0.5625));
  CHECK(p.substitute({r3, r1}) == (r3 + r1).pow(2));
  CHECK((r1 * r2 * r2).reverse_variables(3) == r3 * r2 * r2);
  CHECK(r3.num_vars() == 3);

  const UniPoly u({-(r1 + r2), MultiPoly(0), MultiPoly(1)});
  CHECK(u.str() == "T^2 + (-r1 - r2)");
  CHECK(u.degree() == 2);
  CHECK(u.evaluate(Rational(3), {Rational(4), Rational(5)}) == 0);
}

TEST_CASE("berkowitz agrees with cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix<Rational> m = random_matrix(rng, n);
    const auto c = berkowitz(m);
    REQUIRE(c.size() == n + 1);
    CHECK(c[0] == 1);
    for (int x = -2; x <= 2; ++x) {
      Matrix<Rational> shifted = Matrix<Rational>::identity(n).scaled(Rational(x)) - m;
      Rational value = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        Rational power = 1;
        for (std::size_t e = 0; e < n - i; ++e) power *= x;
        value += c[i] * power;
      }
      CHECK(value == oracle::cofactor_det(shifted));
    }
    CHECK(determinant(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("char_poly on small symbolic matrices") {
  Matrix<MultiPoly> one(1, 1);
  one(0, 0) = r1;
  CHECK(char_poly(one) == UniPoly({-r1, MultiPoly(1)}));

  Matrix<MultiPoly> two(2, 2);
  two(0, 1) = r1 + r2;
  two(1, 0) = 1;
  CHECK(char_poly(two) == UniPoly({-(r1 + r2), MultiPoly(0), MultiPoly(1)}));
}

TEST_CASE("unitriangular solve") {
  const auto id = Matrix<Rational>::identity(3);
  const std::vector<Rational> b{1, 2, 3};
  CHECK(solve_unitriangular(id, b) == b);

  Matrix<Rational> m = Matrix<Rational>::identity(2);
  m(1, 0) = 5;
  CHECK(solve_unitriangular(m, {2, 3}) == std::vector<Rational>{2, 3 - 5 * 2});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 5;
    Matrix<Rational> u = Matrix<Rational>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) u(i, j) = oracle::random_rational(rng, 5, 3);
    if (trial % 2) u = u.transpose();
    std::vector<Rational> rhs(n);
    for (auto& x : rhs) x = oracle::random_rational(rng, 5, 3);
    CHECK(solve_unitriangular(u, rhs) == oracle::gauss_inverse(u) * rhs);
  }
  Matrix<Rational> bad = Matrix<Rational>::identity(2);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(solve_unitriangular(bad, {1, 1}), DomainError);
}

TEST_CASE("adjugate inverse") {
  const auto id = adjugate_inverse(lift(Matrix<Rational>::identity(3)));
  CHECK(id.det == MultiPoly(1));
  CHECK(id.adj == lift(Matrix<Rational>::identity(3)));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix<Rational> m = random_matrix(rng, 4);
    const auto res = adjugate_inverse(lift(m));
    REQUIRE(res.det.is_constant());
    const Rational det = res.det.constant_term();
    REQUIRE(det != 0);
    const Matrix<Rational> inv = oracle::gauss_inverse(m);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(res.adj(i, j).constant_term() / det == inv(i, j));
  }

  Matrix<MultiPoly> sym(2, 2);
  sym(0, 0) = r1;
  sym(0, 1) = r2;
  sym(1, 0) = 1;
  sym(1, 1) = r1 + 1;
  const auto res = adjugate_inverse(sym);
  CHECK(res.det == r1 * (r1 + 1) - r2);
  CHECK(sym * res.adj == Matrix<MultiPoly>::identity(2).scaled(res.det));
}
