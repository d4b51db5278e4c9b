#include <doctest.h>

#include "kschur/error.hpp"
#include "kschur/partition.hpp"
#include "oracles.hpp"

using namespace kschur;

TEST_CASE("partitions_of lists k-bounded partitions in decreasing lex order") {
  for (int n = 0; n <= 14; ++n)
    for (int m = 1; m <= 5; ++m) {
      const auto got = partitions_of(n, m);
      CHECK(static_cast<long long>(got.size()) == oracle::count_bounded(n, m));
      CHECK(got == oracle::partitions(n, m));
    }
}

TEST_CASE("hook lengths agree with a scanned hook table") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : oracle::partitions(n, n)) {
      const auto table = oracle::hook_table(p);
      for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) CHECK(hook_length(p, i, j) == table[i][j]);
    }
}

TEST_CASE("is_core") {
  CHECK(is_core(Partition{2}, 4));
  CHECK_FALSE(is_core(Partition{1, 1, 1, 1}, 4));
  CHECK_THROWS_AS(is_core(Partition{1}, 1), DomainError);
  for (int l : {3, 4})
    for (int n = 0; n <= 10; ++n)
      for (const auto& p : oracle::partitions(n, n)) CHECK(is_core(p, l) == oracle::is_core(p, l));
}

TEST_CASE("bounded_to_core and core_to_bounded are inverse") {
  CHECK(bounded_to_core(Partition{}, 3) == Partition{});
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= k; ++n)
      for (const auto& mu : partitions_of(n, k)) CHECK(bounded_to_core(mu, k) == mu);
  for (int n = 0; n <= 10; ++n)
    for (const auto& mu : partitions_of(n, 3)) {
      const Partition core = bounded_to_core(mu, 3);
      CHECK(oracle::is_core(core, 4));
      CHECK(core_to_bounded(core, 4) == mu);
    }
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : oracle::partitions(n, n)) {
      if (!oracle::is_core(p, 4)) continue;
      CHECK(bounded_to_core(core_to_bounded(p, 4), 3) == p);
    }
  CHECK_THROWS_AS(bounded_to_core(Partition{4}, 3), DomainError);
  CHECK_THROWS_AS(core_to_bounded(Partition{1, 1, 1, 1}, 4), DomainError);
}

TEST_CASE("k-chains of a level 5 example") {
  const Partition lambda{5, 5, 5, 4, 4, 3, 3, 3, 2, 2, 1};
  const auto chains = chain_decomposition(lambda, 5).part_chains();
  REQUIRE(chains.size() == 5);
  CHECK(chains[0] == std::vector<int>{5, 5, 5, 4, 3, 2});
  CHECK(chains[1] == std::vector<int>{4, 3, 2});
  CHECK(chains[2] == std::vector<int>{3, 1});
  CHECK(chains[3].empty());
  CHECK(chains[4].empty());
  // columns of heights 24, 9, 4
  CHECK(omega_conjugate(lambda, 5).conjugate() == Partition{24, 9, 4});

  for (const auto& c : chain_decomposition(Partition{}, 3).part_chains()) CHECK(c.empty());
}

TEST_CASE("omega_k: chain route, core route, small sizes and involution") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 9; ++n)
      for (const auto& lambda : partitions_of(n, k)) {
        const Partition w = omega_by_chains(lambda, k);
        CHECK(w == omega_by_cores(lambda, k));
        if (n <= k) CHECK(w == lambda.conjugate());
      }
  for (int n = 0; n <= 10; ++n)
    for (const auto& lambda : partitions_of(n, 3)) {
      const Partition w = omega_conjugate(lambda, 3);
      CHECK(w.largest() <= 3);
      CHECK(omega_conjugate(w, 3) == lambda);
    }
  CHECK(omega_conjugate(Partition{2, 1, 1}, 3) == Partition{2, 1, 1});
}

TEST_CASE("parsing and validation") {
  CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
  CHECK(parse_partition("3, 2") == Partition{3, 2});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("2,1,0") == Partition{2, 1});
  CHECK_THROWS_AS(parse_partition("1,2"), DomainError);
  CHECK_THROWS_AS(parse_partition("a"), DomainError);
  CHECK_THROWS_AS(parse_partition("-1"), DomainError);
  CHECK_THROWS_AS(require_bounded(Partition{4}, 3), DomainError);
  CHECK(Partition{3, 1}.str() == "(3,1)");
  CHECK(Partition{}.str() == "()");
}
