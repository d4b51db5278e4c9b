#pragma once

#include <cstdint>
#include <vector>

#include "kschur/lattice.hpp"
#include "kschur/rational.hpp"

namespace kschur {

/// Coordinates c_i = ⟨v, α_i⟩ on the fundamental weights Λ_1..Λ_k.
using WeightVector = std::vector<Rational>;

/// Residue of the cell (row, col) of a (k+1)-core, 0-indexed.
int residue(int row, int col, int k);

/// Letters i_1..i_m of a reduced word for the Grassmannian element of λ, in
/// the order the boxes are added starting from ∅ (so i_1 = 0 unless λ = ∅).
/// The chain is found by peeling the core; `variant` = 0 always peels the
/// residue of the topmost removable corner, other values pick pseudo-randomly
/// among the available residues.
std::vector<int> reduced_word(const Partition& lambda, int k, std::uint64_t variant = 0);

/// Center of the fundamental alcove, (1/(k+1), ..., 1/(k+1)).
WeightVector fundamental_center(int k);

/// s_i acting on weight coordinates; s_0 is the reflection in ⟨v, θ⟩ = 1.
WeightVector reflect(int i, const WeightVector& c);

/// w(v) for w = s_{i_1}...s_{i_m}, rightmost letter first.
WeightVector apply_word(const std::vector<int>& word, const WeightVector& v);

/// v_w for the alcove of the Grassmannian element of λ.
WeightVector alcove_center(const Partition& lambda, int k, std::uint64_t variant = 0);

/// All coordinates strictly between 0 and 1.
bool in_box(const WeightVector& c);

/// c'_i = 1 - c_{k+1-i}.
WeightVector involution_coords(const WeightVector& c);

/// The irreducible μ whose alcove center is involution_coords(center(λ)).
Partition involution_I(const Partition& lambda, int k);

/// perm[i] = index of I(basis[i]).
std::vector<std::size_t> involution_permutation(const IrreducibleBasis& basis);

/// Ψ = I∘Ω as a permutation of the basis; checked to be an involution and
/// I, Ω are checked to commute.
std::vector<std::size_t> psi_permutation(const IrreducibleBasis& basis);

}  // namespace kschur
