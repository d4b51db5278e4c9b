#include <doctest.h>

#include <set>

#include "kschur/affine.hpp"
#include "kschur/error.hpp"
#include "kschur/transfer.hpp"

using namespace kschur;

namespace {

WeightVector unit(int k, int a) {
  WeightVector e(k, 0);
  e[a - 1] = 1;
  return e;
}

WeightVector add(WeightVector a, const WeightVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_CASE("residues and reduced words") {
  CHECK(residue(0, 0, 3) == 0);
  CHECK(residue(0, 1, 3) == 3);
  CHECK(residue(1, 0, 3) == 1);
  CHECK(reduced_word(Partition{}, 3).empty());
  CHECK(reduced_word(Partition{1}, 3) == std::vector<int>{0});
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n, 3)) {
      const auto word = reduced_word(lambda, 3);
      CHECK(static_cast<int>(word.size()) == n);
      for (std::uint64_t variant = 1; variant <= 4; ++variant) {
        CHECK(reduced_word(lambda, 3, variant).size() == word.size());
        CHECK(alcove_center(lambda, 3, variant) == alcove_center(lambda, 3));
      }
    }
}

TEST_CASE("reflections") {
  for (int k = 1; k <= 4; ++k) {
    const WeightVector c = fundamental_center(k);
    CHECK(c == WeightVector(k, Rational(1, k + 1)));
    for (int i = 0; i <= k; ++i) {
      CHECK(reflect(i, reflect(i, c)) == c);
      CHECK(reflect(i, c) != c);
    }
  }
  CHECK(apply_word({}, fundamental_center(2)) == fundamental_center(2));
  CHECK_THROWS_AS(reflect(3, fundamental_center(2)), DomainError);
}

TEST_CASE("rectangles translate the fundamental alcove by a fundamental weight") {
  for (int k = 1; k <= 4; ++k)
    for (int a = 1; a <= k; ++a)
      CHECK(alcove_center(rectangle(a, k), k) == add(fundamental_center(k), unit(k, a)));
}

TEST_CASE("irreducible partitions are exactly the alcoves in the unit box") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& kappa : enumerate_irreducible(k)) CHECK(in_box(alcove_center(kappa, k)));
    for (int n = 0; n <= 9; ++n)
      for (const auto& lambda : partitions_of(n, k))
        CHECK(in_box(alcove_center(lambda, k)) == is_irreducible(lambda, k));
  }
}

TEST_CASE("the involution I") {
  CHECK(involution_I(Partition{}, 3) == Partition{2, 1, 1});
  CHECK(involution_I(Partition{}, 2) == Partition{1});
  CHECK(involution_I(Partition{}, 4) == Partition{3, 2, 2, 1, 1, 1});
  CHECK_THROWS_AS(involution_I(Partition{3}, 3), DomainError);
  for (int k = 1; k <= 4; ++k) {
    const IrreducibleBasis basis(k);
    const auto perm = involution_permutation(basis);
    std::set<std::size_t> image(perm.begin(), perm.end());
    CHECK(image.size() == basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(perm[perm[i]] == i);
      CHECK(alcove_center(basis[perm[i]], k) == involution_coords(alcove_center(basis[i], k)));
    }
    const auto omega = omega_permutation(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(perm[omega[i]] == omega[perm[i]]);
  }
}

TEST_CASE("Psi transposes the transfer matrix") {
  const IrreducibleBasis b2(2);
  CHECK(psi_permutation(b2) == std::vector<std::size_t>{1, 0});
  for (int k = 1; k <= 4; ++k) {
    const TransferMatrix phi = build_phi(k);
    const auto psi = psi_permutation(phi.basis);
    for (std::size_t i = 0; i < psi.size(); ++i) CHECK(psi[psi[i]] == i);
    CHECK(phi.entries.permuted(psi) == phi.entries.transpose());
  }
}
