#include "kschur/walk.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kschur/error.hpp"

namespace kschur {

Multigraph build_multigraph(int k) {
  Multigraph g;
  g.k = k;
  g.basis = IrreducibleBasis(k);
  g.out.resize(g.basis.size());
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    for (const CoverEdge& e : covers(g.basis[i], k)) {
      const RectangleFactorization f = rectangle_factorization(e.target, k);
      int color = 0;
      for (int a = 1; a <= k; ++a)
        if (f.p[a - 1] > 0) color = a;
      g.out[i].push_back(g.edges.size());
      g.edges.push_back({i, g.basis.index_of(f.reduced), color});
    }
  }
  const TransferMatrix& phi = cached_phi(k);
  Matrix<MultiPoly> sums(g.basis.size(), g.basis.size());
  for (const MultiEdge& e : g.edges)
    sums(e.source, e.target) += e.color == 0 ? MultiPoly(1) : MultiPoly::variable(e.color);
  if (!(sums == phi.entries)) throw InternalError("multigraph edge weights do not reproduce Φ");
  return g;
}

namespace {

void require_unit(const BoundaryPoint& point, double tol) {
  if (std::abs(point.t - 1) > tol)
    throw DomainError("the walk needs a point normalized to t = 1 (got t = " + std::to_string(point.t) + ")");
}

double color_weight(const BoundaryPoint& point, int color) { return color == 0 ? 1.0 : point.r[color - 1]; }

}  // namespace

std::vector<double> transition_kernel(const Multigraph& g, const BoundaryPoint& point, double tol) {
  require_unit(point, tol);
  std::vector<double> prob(g.edges.size());
  for (std::size_t v = 0; v < g.out.size(); ++v) {
    if (!(point.x[v] > 0)) throw DomainError("eigenvector is not strictly positive");
    double total = 0;
    for (std::size_t e : g.out[v]) {
      const MultiEdge& edge = g.edges[e];
      prob[e] = color_weight(point, edge.color) * point.x[edge.target] / point.x[v];
      total += prob[e];
    }
    if (std::abs(total - 1) > tol)
      throw NumericError("outgoing probabilities at " + g.basis[v].str() + " sum to " + std::to_string(total));
  }
  return prob;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

WalkRng::WalkRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed + stream * 0x9E3779B97F4A7C15ULL)) {}

double WalkRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

Checkpoint make_checkpoint(std::uint64_t step, std::size_t state, const std::vector<std::int64_t>& weight,
                           const std::vector<std::vector<double>>& centers) {
  Checkpoint c;
  c.step = step;
  c.state = state;
  c.weight = weight;
  c.x.resize(weight.size());
  for (std::size_t i = 0; i < weight.size(); ++i) c.x[i] = centers[state][i] + static_cast<double>(weight[i]);
  return c;
}

}  // namespace

WalkTrajectory simulate(const Multigraph& g, const std::vector<double>& kernel, const BoundaryPoint& point,
                        const SimulateOptions& opts) {
  if (kernel.size() != g.edges.size()) throw DomainError("kernel does not match the multigraph");
  std::vector<std::vector<double>> centers;
  for (const Partition& p : g.basis.parts()) centers.push_back(to_doubles(alcove_center(p, g.k)));

  // Cumulative probabilities per vertex; the last one is pinned to 1.
  std::vector<std::vector<double>> cumulative(g.out.size());
  for (std::size_t v = 0; v < g.out.size(); ++v) {
    double acc = 0;
    for (std::size_t e : g.out[v]) cumulative[v].push_back(acc += kernel[e]);
    if (cumulative[v].empty()) throw DomainError("vertex without outgoing edges");
    cumulative[v].back() = 1.0;
  }

  WalkTrajectory traj;
  traj.k = g.k;
  traj.r = point.r;
  traj.seed = opts.seed;
  traj.stream = opts.stream;
  traj.steps = opts.steps;
  traj.weight.assign(g.k, 0);
  traj.checkpoints.push_back(make_checkpoint(0, 0, traj.weight, centers));

  WalkRng rng(opts.seed, opts.stream);
  std::size_t state = 0;
  for (std::uint64_t n = 1; n <= opts.steps; ++n) {
    const double u = rng.uniform();
    const auto& cum = cumulative[state];
    const std::size_t j = std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
    const MultiEdge& e = g.edges[g.out[state][std::min(j, cum.size() - 1)]];
    if (e.color > 0) ++traj.weight[e.color - 1];
    state = e.target;
    if ((opts.record_every && n % opts.record_every == 0) || n == opts.steps)
      traj.checkpoints.push_back(make_checkpoint(n, state, traj.weight, centers));
  }
  traj.state = state;
  return traj;
}

std::vector<double> drift_formula(const Multigraph& g, const BoundaryPoint& point, double tol) {
  require_unit(point, tol);
  const auto& psi = cached_psi(g.k);
  std::vector<double> v(g.k, 0.0);
  for (const MultiEdge& e : g.edges)
    if (e.color > 0) v[e.color - 1] += point.x[psi[e.source]] * point.x[e.target];
  for (int i = 0; i < g.k; ++i) v[i] *= point.r[i] / point.nabla;
  return v;
}

std::vector<double> drift_at(int k, const std::vector<double>& r) {
  const Multigraph& g = [&]() -> const Multigraph& {
    static thread_local std::map<int, Multigraph> graphs;
    auto it = graphs.find(k);
    if (it == graphs.end()) it = graphs.emplace(k, build_multigraph(k)).first;
    return it->second;
  }();
  const auto at = [&](const std::vector<double>& rv) {
    const Normalized u = unit_normalize(k, rv);
    return drift_formula(g, boundary_point(k, u.r));
  };
  if (criterion_irreducible(r, k)) return at(r);
  const std::vector<double> eps{1e-4, 1e-5, 1e-6};
  std::vector<std::vector<double>> vals;
  for (double e : eps) {
    std::vector<double> rv = r;
    for (double& x : rv) x += e;
    vals.push_back(at(rv));
  }
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i) {
    double total = 0;
    for (std::size_t a = 0; a < eps.size(); ++a) {
      double w = 1;
      for (std::size_t b = 0; b < eps.size(); ++b)
        if (a != b) w *= -eps[b] / (eps[a] - eps[b]);
      total += w * vals[a][i];
    }
    out[i] = total;
  }
  return out;
}

DriftEstimate drift_estimate(const WalkTrajectory& traj) {
  if (traj.steps == 0) throw DomainError("drift estimate needs at least one step");
  const auto& cps = traj.checkpoints;
  DriftEstimate est;
  est.mean.resize(traj.k);
  for (int i = 0; i < traj.k; ++i) est.mean[i] = cps.back().x[i] / static_cast<double>(traj.steps);
  est.standard_error.assign(traj.k, std::nan(""));
  if (cps.size() < 3) return est;
  const std::uint64_t len = cps[1].step - cps[0].step;
  for (std::size_t b = 1; b < cps.size(); ++b)
    if (cps[b].step - cps[b - 1].step != len)
      throw DomainError("batch means need equally spaced checkpoints");
  est.batches = cps.size() - 1;
  const double nb = static_cast<double>(est.batches);
  for (int i = 0; i < traj.k; ++i) {
    std::vector<double> means;
    for (std::size_t b = 1; b < cps.size(); ++b)
      means.push_back((cps[b].x[i] - cps[b - 1].x[i]) / static_cast<double>(len));
    double mu = 0;
    for (double m : means) mu += m;
    mu /= nb;
    double var = 0;
    for (double m : means) var += (m - mu) * (m - mu);
    var /= nb - 1;
    est.standard_error[i] = std::sqrt(var / nb);
  }
  return est;
}

std::vector<double> stationary_measure(const BoundaryPoint& point) {
  std::vector<double> m(point.x.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = point.x[i] * point.xhat[i];
  return m;
}

double centrality_defect(const Multigraph& g, const std::vector<double>& kernel, int length) {
  struct Key {
    std::size_t end;
    std::vector<int> weight;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::pair<double, double>> range;  // min, max probability
  std::vector<int> weight(g.k, 0);
  const auto walk = [&](auto&& self, std::size_t v, int depth, double prob) -> void {
    if (depth == length) {
      auto [it, inserted] = range.emplace(Key{v, weight}, std::make_pair(prob, prob));
      if (!inserted) {
        it->second.first = std::min(it->second.first, prob);
        it->second.second = std::max(it->second.second, prob);
      }
      return;
    }
    for (std::size_t e : g.out[v]) {
      const MultiEdge& edge = g.edges[e];
      if (edge.color > 0) ++weight[edge.color - 1];
      self(self, edge.target, depth + 1, prob * kernel[e]);
      if (edge.color > 0) --weight[edge.color - 1];
    }
  };
  walk(walk, 0, 0, 1.0);
  double defect = 0;
  for (const auto& [key, mm] : range)
    if (mm.second > 0) defect = std::max(defect, (mm.second - mm.first) / mm.second);
  return defect;
}

}  // namespace kschur
