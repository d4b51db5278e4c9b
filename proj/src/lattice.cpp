#include "kschur/lattice.hpp"

#include <algorithm>

#include "kschur/error.hpp"
#include "kschur/json.hpp"

namespace kschur {

namespace {

bool addable(const Partition& lambda, int row, int k) {
  if (lambda[row] + 1 > k) return false;
  return row == 0 || lambda[row - 1] > lambda[row];
}

Partition add_box(const Partition& lambda, int row) {
  std::vector<int> parts = lambda.parts();
  if (row == lambda.length()) parts.push_back(0);
  ++parts[row];
  return Partition(std::move(parts));
}

}  // namespace

std::vector<CoverEdge> covers_by_omega(const Partition& lambda, int k) {
  require_bounded(lambda, k);
  const Partition lambda_omega = omega_conjugate(lambda, k);
  std::vector<CoverEdge> out;
  for (int row = 0; row <= lambda.length(); ++row) {
    if (!addable(lambda, row, k)) continue;
    Partition mu = add_box(lambda, row);
    if (omega_conjugate(mu, k).contains(lambda_omega)) out.push_back({lambda, std::move(mu), row});
  }
  return out;
}

std::vector<CoverEdge> covers_by_chains(const Partition& lambda, int k) {
  require_bounded(lambda, k);
  const int len = lambda.length();
  std::vector<CoverEdge> out;
  for (int row = 0; row <= len; ++row) {
    if (!addable(lambda, row, k)) continue;
    // Every later element of the chain through `row` must sit directly under
    // a part of the same size. Once past the last part everything is zero.
    bool ok = true;
    for (int j = row + k - lambda[row] + 1; j - 1 < len; j += k - lambda[j] + 1) {
      if (lambda[j - 1] != lambda[j]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back({lambda, add_box(lambda, row), row});
  }
  return out;
}

std::vector<CoverEdge> covers(const Partition& lambda, int k) {
  auto by_chains = covers_by_chains(lambda, k);
  auto by_omega = covers_by_omega(lambda, k);
  if (by_chains != by_omega)
    throw InternalError("cover rules disagree on " + lambda.str() + " for k=" + std::to_string(k));
  return by_chains;
}

namespace {

void strips_rec(const Partition& lambda, int row, int remaining, int max_part,
                std::vector<int>& parts, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  if (row > lambda.length()) return;
  const int upper = (row == 0) ? max_part : lambda[row - 1];
  const int base = lambda[row];
  for (int add = std::min(remaining, upper - base); add >= 0; --add) {
    parts[row] = base + add;
    strips_rec(lambda, row + 1, remaining - add, max_part, parts, out);
  }
  parts[row] = base;
}

}  // namespace

std::vector<Partition> horizontal_strips(const Partition& lambda, int r, int max_part) {
  std::vector<Partition> out;
  if (r < 0) return out;
  std::vector<int> parts = lambda.parts();
  parts.push_back(0);
  strips_rec(lambda, 0, r, max_part, parts, out);
  return out;
}

bool is_weak_horizontal_strip(const Partition& lambda, const Partition& mu, int r, int k) {
  require_bounded(lambda, k);
  require_bounded(mu, k);
  if (!mu.contains(lambda)) throw DomainError(lambda.str() + " is not contained in " + mu.str());
  if (r < 1 || r > k) throw DomainError("strip size must satisfy 1 <= r <= k");
  if (mu.size() - lambda.size() != r) return false;
  for (int i = 0; i + 1 < mu.length(); ++i)
    if (mu[i + 1] > lambda[i]) return false;
  const Partition lo = omega_conjugate(lambda, k);
  const Partition mo = omega_conjugate(mu, k);
  if (!mo.contains(lo)) return false;
  for (int i = 0; i < mo.length(); ++i)
    if (mo[i] - lo[i] > 1) return false;
  return true;
}

std::vector<Partition> weak_strips(const Partition& lambda, int r, int k) {
  require_bounded(lambda, k);
  if (r < 1 || r > k) throw DomainError("strip size must satisfy 1 <= r <= k");
  const Partition lo = omega_conjugate(lambda, k);
  std::vector<Partition> out;
  for (Partition& mu : horizontal_strips(lambda, r, k)) {
    const Partition mo = omega_conjugate(mu, k);
    if (!mo.contains(lo)) continue;
    bool vertical = true;
    for (int i = 0; i < mo.length() && vertical; ++i) vertical = mo[i] - lo[i] <= 1;
    if (vertical) out.push_back(std::move(mu));
  }
  return out;
}

Partition rectangle(int a, int k) {
  if (a < 1 || a > k) throw DomainError("rectangle index must satisfy 1 <= a <= k");
  return Partition(std::vector<int>(a, k - a + 1));
}

int rectangle_size(int a, int k) { return a * (k + 1 - a); }

RectangleFactorization rectangle_factorization(const Partition& lambda, int k) {
  require_bounded(lambda, k);
  RectangleFactorization f;
  f.p.assign(k, 0);
  std::vector<int> reduced;
  for (int j = k; j >= 1; --j) {
    const int a = k + 1 - j;  // R_a has a parts equal to j
    const int m = lambda.multiplicity(j);
    f.p[a - 1] = m / a;
    reduced.insert(reduced.end(), m % a, j);
  }
  f.reduced = Partition(std::move(reduced));
  return f;
}

Partition reassemble(const RectangleFactorization& f, int k) {
  std::vector<int> parts = f.reduced.parts();
  for (int a = 1; a <= k; ++a) parts.insert(parts.end(), f.p.at(a - 1) * a, k - a + 1);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool is_irreducible(const Partition& lambda, int k) {
  require_bounded(lambda, k);
  for (int j = 1; j <= k; ++j)
    if (lambda.multiplicity(j) > k - j) return false;
  return true;
}

std::vector<Partition> enumerate_irreducible(int k) {
  if (k < 1) throw DomainError("level k must be at least 1");
  std::vector<Partition> out;
  std::vector<int> mult(k, 0);  // mult[j-1] for part value j < k
  for (;;) {
    std::vector<int> parts;
    for (int j = k - 1; j >= 1; --j) parts.insert(parts.end(), mult[j - 1], j);
    out.emplace_back(std::move(parts));
    int j = 1;
    while (j <= k - 1 && mult[j - 1] == k - j) mult[j++ - 1] = 0;
    if (j > k - 1) break;
    ++mult[j - 1];
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  return out;
}

IrreducibleBasis::IrreducibleBasis(int k) : k_(k), parts_(enumerate_irreducible(k)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
}

std::size_t IrreducibleBasis::index_of(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end())
    throw DomainError(lambda.str() + " is not an irreducible " + std::to_string(k_) +
                      "-bounded partition");
  return it->second;
}

std::string lattice_graph_json(int k, int max_size) {
  nlohmann::json doc;
  doc["schema"] = kJsonSchema;
  doc["k"] = k;
  doc["max_size"] = max_size;
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  for (int n = 0; n <= max_size; ++n) {
    for (const Partition& lambda : partitions_of(n, k)) {
      vertices.push_back(lambda);
      if (n == max_size) continue;
      for (const CoverEdge& e : covers(lambda, k))
        edges.push_back({{"source", e.source}, {"target", e.target}, {"row", e.added_row}});
    }
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc.dump(2);
}

}  // namespace kschur
