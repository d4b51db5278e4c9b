#include "kschur/affine.hpp"

#include <algorithm>

#include "kschur/error.hpp"
#include "kschur/transfer.hpp"

namespace kschur {

int residue(int row, int col, int k) {
  const int l = k + 1;
  return ((row - col) % l + l) % l;
}

std::vector<int> reduced_word(const Partition& lambda, int k, std::uint64_t variant) {
  std::vector<int> rows = bounded_to_core(lambda, k).parts();
  std::vector<int> word;
  std::uint64_t state = variant;
  while (!rows.empty()) {
    // Removable corners (row, rows[row]-1), top to bottom.
    std::vector<int> corner_residues;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r + 1 == rows.size() || rows[r] > rows[r + 1])
        corner_residues.push_back(residue(static_cast<int>(r), rows[r] - 1, k));
    int pick = corner_residues.front();
    if (variant != 0) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      pick = corner_residues[(state >> 33) % corner_residues.size()];
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const bool corner = r + 1 == rows.size() || rows[r] > rows[r + 1];
      if (corner && residue(static_cast<int>(r), rows[r] - 1, k) == pick) --rows[r];
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    word.push_back(pick);
  }
  std::reverse(word.begin(), word.end());
  if (static_cast<int>(word.size()) != lambda.size())
    throw InternalError("reduced word of " + lambda.str() + " has the wrong length");
  return word;
}

WeightVector fundamental_center(int k) {
  if (k < 1) throw DomainError("level k must be at least 1");
  return WeightVector(k, Rational(1, k + 1));
}

WeightVector reflect(int i, const WeightVector& c) {
  const int k = static_cast<int>(c.size());
  if (i < 0 || i > k) throw DomainError("reflection index out of range");
  WeightVector out = c;
  if (i == 0) {
    Rational height = -1;
    for (const auto& x : c) height += x;
    // θ = Λ_1 + Λ_k, or 2Λ_1 when k = 1.
    out[0] -= height;
    out[k - 1] -= height;
    return out;
  }
  const Rational ci = c[i - 1];
  out[i - 1] -= 2 * ci;
  if (i >= 2) out[i - 2] += ci;
  if (i <= k - 1) out[i] += ci;
  return out;
}

WeightVector apply_word(const std::vector<int>& word, const WeightVector& v) {
  WeightVector c = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = reflect(*it, c);
  return c;
}

WeightVector alcove_center(const Partition& lambda, int k, std::uint64_t variant) {
  return apply_word(reduced_word(lambda, k, variant), fundamental_center(k));
}

bool in_box(const WeightVector& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x > 0 && x < 1; });
}

WeightVector involution_coords(const WeightVector& c) {
  const std::size_t k = c.size();
  WeightVector out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = 1 - c[k - 1 - i];
  return out;
}

namespace {

std::vector<std::size_t> involution_from_centers(const IrreducibleBasis& basis) {
  const int k = basis.k();
  std::vector<WeightVector> centers;
  centers.reserve(basis.size());
  for (const Partition& p : basis.parts()) centers.push_back(alcove_center(p, k));
  std::vector<std::size_t> perm(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const WeightVector target = involution_coords(centers[i]);
    auto it = std::find(centers.begin(), centers.end(), target);
    if (it == centers.end())
      throw InternalError("no irreducible alcove is the image of " + basis[i].str() + " under I");
    perm[i] = static_cast<std::size_t>(it - centers.begin());
  }
  return perm;
}

}  // namespace

std::vector<std::size_t> involution_permutation(const IrreducibleBasis& basis) {
  return involution_from_centers(basis);
}

Partition involution_I(const Partition& lambda, int k) {
  if (!is_irreducible(lambda, k)) throw DomainError(lambda.str() + " is not irreducible");
  const IrreducibleBasis basis(k);
  return basis[involution_from_centers(basis)[basis.index_of(lambda)]];
}

std::vector<std::size_t> psi_permutation(const IrreducibleBasis& basis) {
  const auto inv = involution_permutation(basis);
  const auto omega = omega_permutation(basis);
  std::vector<std::size_t> psi(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    psi[i] = inv[omega[i]];
    if (omega[inv[i]] != psi[i]) throw InternalError("I and Ω do not commute");
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (psi[psi[i]] != i) throw InternalError("Ψ is not an involution");
  return psi;
}

}  // namespace kschur
