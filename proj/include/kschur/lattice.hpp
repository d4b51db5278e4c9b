#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

/// An arrow source → target in B_k; the new box sits at the end of `added_row`.
struct CoverEdge {
  Partition source;
  Partition target;
  int added_row = 0;  // 0-indexed

  bool operator==(const CoverEdge&) const = default;
};

/// Covers computed from ω_k containment only.
std::vector<CoverEdge> covers_by_omega(const Partition& lambda, int k);
/// Covers computed from the chain criterion only.
std::vector<CoverEdge> covers_by_chains(const Partition& lambda, int k);
/// All arrows out of λ in B_k; both routes run and must agree.
std::vector<CoverEdge> covers(const Partition& lambda, int k);

/// μ/λ is a horizontal r-strip and μ^{ω_k}/λ^{ω_k} a vertical r-strip.
bool is_weak_horizontal_strip(const Partition& lambda, const Partition& mu, int r, int k);

/// Every k-bounded μ such that μ/λ is a weak horizontal strip of size r.
std::vector<Partition> weak_strips(const Partition& lambda, int r, int k);

/// Every μ with μ/λ an ordinary horizontal strip of size r and μ_1 ≤ max_part.
std::vector<Partition> horizontal_strips(const Partition& lambda, int r, int max_part);

/// R_a = (k-a+1)^a for 1 ≤ a ≤ k.
Partition rectangle(int a, int k);
/// |R_a| = a(k+1-a).
int rectangle_size(int a, int k);

struct RectangleFactorization {
  std::vector<int> p;  // p[a-1] copies of R_a
  Partition reduced;
};

RectangleFactorization rectangle_factorization(const Partition& lambda, int k);
/// Inverse of rectangle_factorization.
Partition reassemble(const RectangleFactorization& f, int k);

bool is_irreducible(const Partition& lambda, int k);

/// Irreducible k-bounded partitions ordered by size, then lexicographically
/// decreasing. There are k! of them.
std::vector<Partition> enumerate_irreducible(int k);

/// Fixed indexing of the irreducible partitions for one level.
class IrreducibleBasis {
 public:
  explicit IrreducibleBasis(int k);

  int k() const { return k_; }
  std::size_t size() const { return parts_.size(); }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<Partition>& parts() const { return parts_; }
  /// Throws DomainError if λ is not an irreducible k-bounded partition.
  std::size_t index_of(const Partition& lambda) const;

 private:
  int k_;
  std::vector<Partition> parts_;
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

/// Edge list of B_k restricted to |λ| ≤ max_size, serialized as JSON.
std::string lattice_graph_json(int k, int max_size);

}  // namespace kschur
