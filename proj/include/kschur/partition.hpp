#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace kschur {

/// An integer partition stored without trailing zeros.
///
/// Indexing past the last part returns 0, so the partition behaves as an
/// infinite weakly decreasing sequence. Ordering is lexicographic on the parts
/// and only exists so partitions can key ordered containers.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless `parts` is weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int size() const;  // |λ|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int value) const;

  Partition conjugate() const;
  bool contains(const Partition& other) const;  // other ⊆ *this as diagrams

  std::string str() const;  // "(2,1,1)", "()" for the empty partition

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// μ ⊴ λ in dominance order (requires |μ| = |λ|).
bool dominated_by(const Partition& mu, const Partition& lambda);

/// All partitions of n with parts ≤ max_part, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n, int max_part);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

/// Hook length of cell (row, col), 0-indexed; the cell must belong to λ.
int hook_length(const Partition& lambda, int row, int col);

/// Parses "2,1,1", "(2,1,1)", "[2,1,1]" or "" / "()" for the empty partition.
Partition parse_partition(const std::string& text);

// ---------------------------------------------------------------------------
// Cores, the p/c bijection and k-conjugation.

bool is_core(const Partition& lambda, int l);

/// 𝔭: delete every cell of the l-core with hook length > l and left-justify.
Partition core_to_bounded(const Partition& core, int l);

/// 𝔠: the unique (k+1)-core whose image under 𝔭 is μ.
Partition bounded_to_core(const Partition& mu, int k);

/// One k-chain of a zero-padded k-bounded partition.
struct Chain {
  std::vector<int> values;       // part values, trailing zeros included
  std::vector<int> origin_rows;  // 0-indexed rows visited, parallel to values

  int sum() const;
  std::vector<int> nonzero_values() const;
};

struct ChainDecomp {
  int k = 0;
  int padded_length = 0;     // rows 0..padded_length-1 are covered
  std::vector<Chain> chains;  // in order of their first row

  /// Exactly k value sequences with zeros dropped, empty ones appended.
  std::vector<std::vector<int>> part_chains() const;
};

ChainDecomp chain_decomposition(const Partition& lambda, int k);

/// λ^{ω_k} computed from chain sums only.
Partition omega_by_chains(const Partition& lambda, int k);
/// λ^{ω_k} computed as 𝔭(𝔠(λ)′) only.
Partition omega_by_cores(const Partition& lambda, int k);
/// λ^{ω_k}; both routes are evaluated and must agree (InternalError otherwise).
Partition omega_conjugate(const Partition& lambda, int k);

/// Throws DomainError if λ has a part larger than k or k < 1.
void require_bounded(const Partition& lambda, int k);

}  // namespace kschur
