#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kschur/affine.hpp"
#include "kschur/boundary.hpp"
#include "kschur/lattice.hpp"

namespace kschur {

/// One arrow λ → μ of B_k seen on reduced partitions: source λ, target μ̃,
/// color a when μ completes the rectangle R_a, 0 otherwise.
struct MultiEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  int color = 0;

  bool operator==(const MultiEdge&) const = default;
  auto operator<=>(const MultiEdge&) const = default;
};

struct Multigraph {
  int k = 0;
  IrreducibleBasis basis{1};
  std::vector<MultiEdge> edges;
  std::vector<std::vector<std::size_t>> out;  // edge indices per source
};

/// Built from covers; Σ r_color over parallel edges is checked against Φ.
Multigraph build_multigraph(int k);

/// Probability r_{c(e)} X(target) / X(source) per edge (r_0 = 1); requires t = 1
/// and checks that every vertex distributes mass 1.
std::vector<double> transition_kernel(const Multigraph& g, const BoundaryPoint& point, double tol = 1e-9);

/// Seeded generator: mt19937_64 whose seed is splitmix64(seed + stream·φ64),
/// φ64 = 0x9E3779B97F4A7C15. Uniform doubles use the top 53 bits, so streams
/// are bit-identical across platforms.
class WalkRng {
 public:
  WalkRng(std::uint64_t seed, std::uint64_t stream = 0);
  double uniform();  // [0, 1)
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct Checkpoint {
  std::uint64_t step = 0;
  std::size_t state = 0;
  std::vector<std::int64_t> weight;
  std::vector<double> x;  // ⟨v_n, α_i⟩ = center(state)_i + weight_i
};

struct WalkTrajectory {
  int k = 0;
  std::vector<double> r;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t steps = 0;
  std::size_t state = 0;
  std::vector<std::int64_t> weight;
  std::vector<Checkpoint> checkpoints;  // step 0, every record_every steps, and the last step
};

struct SimulateOptions {
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t record_every = 0;  // 0: only the first and last step
};

WalkTrajectory simulate(const Multigraph& g, const std::vector<double>& kernel, const BoundaryPoint& point,
                        const SimulateOptions& opts);

/// v(i) = (r_i / ∇) Σ_{edges of color i} X(Ψ(source)) X(target); requires t = 1.
std::vector<double> drift_formula(const Multigraph& g, const BoundaryPoint& point, double tol = 1e-9);

/// Drift at any nonzero r: normalized to t = 1 first, and taken as a limit along
/// r + ε(1, ..., 1) on the reducible locus.
std::vector<double> drift_at(int k, const std::vector<double>& r);

struct DriftEstimate {
  std::vector<double> mean;  // x(n) / n
  std::vector<double> standard_error;  // batch means over consecutive checkpoints
  std::size_t batches = 0;
};

/// Requires equally spaced checkpoints (simulate with record_every dividing steps).
DriftEstimate drift_estimate(const WalkTrajectory& traj);

/// m(A) = X(A) X̂(A).
std::vector<double> stationary_measure(const BoundaryPoint& point);

/// Largest relative spread of path probabilities among paths from ∅ of the
/// given length that share their endpoint and accumulated weight.
double centrality_defect(const Multigraph& g, const std::vector<double>& kernel, int length);

}  // namespace kschur
