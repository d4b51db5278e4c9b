#include <doctest.h>

#include <cmath>
#include <random>

#include "kschur/boundary.hpp"
#include "kschur/error.hpp"
#include "oracles.hpp"

using namespace kschur;
using oracle::max_abs_diff;

TEST_CASE("Perron data for k=2") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = oracle::uniform_vector(rng, 2, 0.01, 3.0);
    const BoundaryPoint p = boundary_point(2, r);
    const double s = std::sqrt(r[0] + r[1]);
    CHECK(p.t == doctest::Approx(s).epsilon(1e-14));
    CHECK(p.x[0] == 1.0);
    CHECK(p.x[1] == doctest::Approx(s).epsilon(1e-14));
    CHECK(p.h[0] == doctest::Approx(s).epsilon(1e-14));
    CHECK(p.h[1] == doctest::Approx(r[0]).epsilon(1e-14));
  }
  CHECK_THROWS_AS(boundary_point(3, {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(boundary_point(2, {1, -1}), DomainError);
}

TEST_CASE("perron on a dense matrix") {
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 3, 4;
  const PerronResult res = perron(a);
  const double t = (5 + std::sqrt(33.0)) / 2;
  CHECK(res.t == doctest::Approx(t).epsilon(1e-14));
  CHECK((a * res.x - res.t * res.x).norm() < 1e-12);
}

TEST_CASE("perron falls back to a dense start when iteration stalls") {
  // Nearly decoupled blocks with close eigenvalues: A + I contracts at
  // about 1 - 5e-5 per step, far too slowly for 2000 iterations.
  Eigen::MatrixXd a(4, 4);
  a << 0, 1, 0, 0,
       1, 0, 1e-7, 0,
       0, 0, 0, 1.0001,
       0, 1e-7, 1.0001, 0;
  const PerronResult res = perron(a, 1e-12, 2000);
  CHECK(res.used_dense_start);
  CHECK(res.iterations < 2000);
  Eigen::EigenSolver<Eigen::MatrixXd> es(a);
  CHECK(res.t == doctest::Approx(es.eigenvalues().real().maxCoeff()).epsilon(1e-13));
  CHECK((a * res.x - res.t * res.x).lpNorm<Eigen::Infinity>() < 1e-12);

  Eigen::MatrixXd b(2, 2);
  b << 1, 2, 3, 4;
  CHECK(perron(b, 1e-12, 1).used_dense_start);
  CHECK(perron(b, 1e-12, 1).t == doctest::Approx((5 + std::sqrt(33.0)) / 2).epsilon(1e-14));
}

TEST_CASE("morphism values are harmonic") {
  std::mt19937_64 rng(2);
  for (int k = 2; k <= 4; ++k)
    for (int trial = 0; trial < 3; ++trial) {
      const auto r = oracle::uniform_vector(rng, k, 0.1, 2.0);
      const BoundaryPoint p = boundary_point(k, r);
      CHECK(morphism_eval(p, Partition{}) == 1.0);
      for (int a = 1; a <= k; ++a) CHECK(morphism_eval(p, rectangle(a, k)) == doctest::Approx(r[a - 1]).epsilon(1e-12));
      for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n, k)) {
          double sum = 0;
          for (const auto& e : covers(lambda, k)) sum += morphism_eval(p, e.target);
          const double lhs = p.t * morphism_eval(p, lambda);
          CHECK(std::abs(lhs - sum) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
      double pairing = 0;
      for (std::size_t i = 0; i < p.x.size(); ++i) pairing += p.x[i] * p.xhat[i];
      CHECK(pairing == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("f and g for k=2") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = oracle::uniform_vector(rng, 2, 0.0, 5.0);
    const FResult f = f_map(2, r);
    CHECK(max_abs_diff(f.h, {std::sqrt(r[0] + r[1]), r[0]}) < 1e-12);
    const auto h = oracle::uniform_vector(rng, 2, 0.0, 3.0);
    CHECK(max_abs_diff(g_map(2, h), {h[1], h[0] * h[0] - h[1]}) < 1e-12);
  }
  CHECK(max_abs_diff(f_map(2, {1, 3}).h, {2, 1}) == 0);
  CHECK(g_map(3, {0, 0, 0}) == std::vector<double>{0, 0, 0});
  CHECK(homogeneity_degree(1, 3) == 3);
  CHECK(homogeneity_degree(2, 3) == 4);
}

TEST_CASE("f and g are inverse, including the reducible locus") {
  std::mt19937_64 rng(4);
  for (int k = 2; k <= 4; ++k)
    for (int trial = 0; trial < 10; ++trial) {
      const auto r = oracle::uniform_vector(rng, k, 0.05, 2.0);
      const FResult f = f_map(k, r);
      CHECK_FALSE(f.extrapolated);
      CHECK(max_abs_diff(g_map(k, f.h), r) < 1e-9);
      CHECK(in_v_bar(k, f.h, 1e-12));
    }
  const FResult f = f_map(3, {1, 0, 0});
  CHECK(f.extrapolated);
  CHECK(max_abs_diff(g_map(3, f.h), {1, 0, 0}) < 1e-6);
  const FResult zero = f_map(3, {0, 0, 0});
  CHECK(max_abs_diff(zero.h, {0, 0, 0}) < 1e-6);
}

TEST_CASE("normalizations") {
  const Normalized s = simplex_normalize(2, {4, 0});
  CHECK(s.t == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(max_abs_diff(s.r, {1, 0}) < 1e-14);
  CHECK_THROWS_AS(simplex_normalize(2, {0, 0}), DomainError);

  std::mt19937_64 rng(5);
  for (int k = 2; k <= 4; ++k)
    for (int trial = 0; trial < 5; ++trial) {
      const auto r = oracle::uniform_vector(rng, k, 0.1, 3.0);
      const Normalized u = unit_normalize(k, r);
      CHECK(boundary_point(k, u.r).t == doctest::Approx(1.0).epsilon(1e-12));
      const Normalized again = unit_normalize(k, u.r);
      CHECK(again.t == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(max_abs_diff(again.r, u.r) < 1e-12);
      const Normalized sn = simplex_normalize(k, r);
      double total = 0;
      for (double x : sn.r) total += x;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("zeta coefficients") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const Normalized u2 = unit_normalize(2, oracle::uniform_vector(rng, 2, 0.1, 2.0));
    CHECK(max_abs_diff(zeta_coefficients(boundary_point(2, u2.r)), {1, 1, u2.r[1]}) < 1e-12);
    const Normalized u3 = unit_normalize(3, oracle::uniform_vector(rng, 3, 0.1, 2.0));
    const auto& r = u3.r;
    CHECK(max_abs_diff(zeta_coefficients(boundary_point(3, r)), {1, 1, 0.5 * (r[2] - r[0] + 1), r[2]}) < 1e-12);
  }
  CHECK_THROWS_AS(zeta_coefficients(boundary_point(2, {1, 3})), DomainError);
}

TEST_CASE("k=3 region") {
  CHECK(region_k3(0, 0));
  CHECK(region_k3(1, 1));
  CHECK_FALSE(region_k3(1.1, 0.5));
  for (int i = 0; i <= 24; ++i)
    for (int j = 0; j <= 24; ++j) {
      const double h2 = 1.2 * i / 24 + 0.013;
      const double h3 = 1.2 * j / 24 + 0.007;
      CHECK(region_k3(h2, h3) == in_v_bar(3, {1.0, h2, h3}));
    }
}

TEST_CASE("eigen route and positivity route of the closure agree") {
  std::mt19937_64 rng(8);
  for (int k = 2; k <= 3; ++k)
    for (int trial = 0; trial < 40; ++trial) {
      const auto h = oracle::uniform_vector(rng, k, 0.0, 2.0);
      CHECK(in_v_bar(k, h, 1e-9) == in_v_bar_by_eigen(k, h, 1e-7));
    }
}

TEST_CASE("projection to level k") {
  std::mt19937_64 rng(9);
  for (int k = 2; k <= 3; ++k)
    for (int trial = 0; trial < 5; ++trial) {
      auto r = oracle::uniform_vector(rng, k, 0.1, 2.0);
      const auto fk = f_map(k, r).h;
      r.push_back(0.0);
      const auto h = f_map(k + 1, r).h;
      CHECK(max_abs_diff(project_pi(k + 1, h), fk) < 1e-8);
    }
}

TEST_CASE("rational formula") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> sdist(0.1, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = oracle::uniform_vector(rng, 3, 0.1, 2.0);
    const double s = sdist(rng);
    const RationalValue v = rational_formula(3, Partition{2, 1, 1}, s, r);
    CHECK(v.value == doctest::Approx(0.5 * std::pow(s, 4) - 0.5 * (r[0] + r[2]) * s - r[1]).epsilon(1e-11));
    CHECK(rational_formula(3, Partition{}, s, r).value == doctest::Approx(1.0).epsilon(1e-14));

    const BoundaryPoint p = boundary_point(3, r);
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : partitions_of(n, 3)) {
        const double expected = morphism_eval(p, lambda);
        CHECK(std::abs(rational_formula(3, lambda, p.t, r).value - expected) <= 1e-9 * std::max(1.0, expected));
      }
  }
  const RationalValue limit = rational_formula(3, Partition{2, 1, 1}, 2.0, {1, 2, 1});
  CHECK(limit.limit);
  CHECK(limit.value == doctest::Approx(0.5 * 16 - 2 - 2).epsilon(1e-8));
}

TEST_CASE("k-Schur values from h") {
  std::mt19937_64 rng(11);
  const auto r = oracle::uniform_vector(rng, 3, 0.1, 2.0);
  const BoundaryPoint p = boundary_point(3, r);
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n, 3))
      CHECK(kschur_value(3, lambda, p.h) == doctest::Approx(morphism_eval(p, lambda)).epsilon(1e-9));
}
