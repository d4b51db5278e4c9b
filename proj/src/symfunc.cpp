#include "kschur/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "kschur/error.hpp"
#include "kschur/json.hpp"
#include "kschur/lattice.hpp"

namespace kschur {

SymFuncExpr SymFuncExpr::single(Basis b, int level, const Partition& p, const Rational& c) {
  SymFuncExpr e(b, level);
  e.add(p, c);
  return e;
}

void SymFuncExpr::add(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

void SymFuncExpr::add(const SymFuncExpr& other, const Rational& scale) {
  if (other.basis != basis || (basis == Basis::KSchur && other.k != k))
    throw DomainError("cannot add expressions in different bases");
  for (const auto& [p, c] : other.coeffs) add(p, c * scale);
}

Rational SymFuncExpr::coeff(const Partition& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool SymFuncExpr::all_nonnegative_integers() const {
  for (const auto& [p, c] : coeffs)
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

std::string basis_name(Basis b, int k) {
  switch (b) {
    case Basis::H:
      return "H";
    case Basis::Schur:
      return "SCHUR";
    case Basis::KSchur:
      return "KSCHUR(" + std::to_string(k) + ")";
  }
  return "?";
}

std::string SymFuncExpr::str() const {
  if (coeffs.empty()) return "0";
  const std::string symbol = basis == Basis::H ? "h" : (basis == Basis::Schur ? "s" : "s" + std::to_string(k));
  std::string out;
  bool first = true;
  // Largest partitions first, matching the usual way expansions are written.
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const Rational a = abs(it->second);
    const bool negative = it->second < 0;
    std::string body = (a == 1 ? "" : to_string(a) + "*") + symbol + it->first.str();
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

nlohmann::json SymFuncExpr::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    terms.push_back({{"partition", it->first}, {"coeff", kschur::to_string(it->second)}});
  nlohmann::json j{{"basis", basis == Basis::H ? "H" : (basis == Basis::Schur ? "SCHUR" : "KSCHUR")},
                   {"terms", std::move(terms)}};
  if (basis == Basis::KSchur) j["k"] = k;
  return j;
}

// ---------------------------------------------------------------------------

namespace {

using StripFn = std::vector<Partition> (*)(const Partition&, int, int);

std::vector<Partition> weak_strips_fn(const Partition& p, int r, int k) { return weak_strips(p, r, k); }
std::vector<Partition> ordinary_strips_fn(const Partition& p, int r, int bound) {
  return horizontal_strips(p, r, bound);
}

// Counts of strip sequences with sizes alpha, for every endpoint inside `target`
// (or any endpoint when target is null).
std::map<Partition, long long> strip_counts(const std::vector<int>& alpha, int bound, StripFn strips,
                                            const Partition* target) {
  std::map<Partition, long long> current{{Partition(), 1}};
  for (int a : alpha) {
    if (a < 0) throw DomainError("composition entries must be nonnegative");
    if (a == 0) continue;
    std::map<Partition, long long> next;
    for (const auto& [mu, count] : current)
      for (Partition& nu : strips(mu, a, bound)) {
        if (target && !target->contains(nu)) continue;
        next[std::move(nu)] += count;
      }
    current = std::move(next);
  }
  return current;
}

int composition_size(const std::vector<int>& alpha) {
  int n = 0;
  for (int a : alpha) n += a;
  return n;
}

}  // namespace

long long count_k_tableaux(const Partition& lambda, const std::vector<int>& alpha, int k) {
  require_bounded(lambda, k);
  if (composition_size(alpha) != lambda.size())
    throw DomainError("content size does not match " + lambda.str());
  for (int a : alpha)
    if (a > k) throw DomainError("content entries must be at most k");
  auto counts = strip_counts(alpha, k, weak_strips_fn, &lambda);
  auto it = counts.find(lambda);
  return it == counts.end() ? 0 : it->second;
}

long long count_ssyt(const Partition& lambda, const std::vector<int>& alpha) {
  if (composition_size(alpha) != lambda.size())
    throw DomainError("content size does not match " + lambda.str());
  auto counts = strip_counts(alpha, std::max(lambda.largest(), 1), ordinary_strips_fn, &lambda);
  auto it = counts.find(lambda);
  return it == counts.end() ? 0 : it->second;
}

std::size_t KostkaTable::index_of(const Partition& p) const {
  auto it = index.find(p);
  if (it == index.end())
    throw DomainError(p.str() + " is not in the degree " + std::to_string(degree) + " table");
  return it->second;
}

namespace {

std::unique_ptr<KostkaTable> build_table(int k, int n) {
  auto t = std::make_unique<KostkaTable>();
  t->k = k;
  t->degree = n;
  const int bound = k == 0 ? n : k;
  t->basis = partitions_of(n, bound);
  for (std::size_t i = 0; i < t->basis.size(); ++i) t->index.emplace(t->basis[i], i);
  const std::size_t m = t->basis.size();
  t->kostka = Matrix<Rational>(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto counts = strip_counts(t->basis[j].parts(), std::max(bound, 1),
                                     k == 0 ? ordinary_strips_fn : weak_strips_fn, nullptr);
    for (const auto& [lambda, count] : counts)
      t->kostka(t->index_of(lambda), j) = Rational(static_cast<long>(count));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& v = t->kostka(i, j);
      if (i == j && v != 1)
        throw InternalError("Kostka diagonal entry at " + t->basis[i].str() + " is not 1");
      if (i != j && v != 0 && !dominated_by(t->basis[j], t->basis[i]))
        throw InternalError("Kostka table is not unitriangular in dominance order");
    }
  // h_α = Σ_λ K(λ, α) s_λ, so s = (Kᵀ)⁻¹ h.
  const Matrix<Rational> kt = t->kostka.transpose();
  t->s_in_h = Matrix<Rational>(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rational> e(m, 0);
    e[j] = 1;
    const auto col = solve_unitriangular(kt, e);
    for (std::size_t i = 0; i < m; ++i) t->s_in_h(i, j) = col[i];
  }
  return t;
}

const KostkaTable& cached_table(int k, int n) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<KostkaTable>> cache;
  const auto key = std::make_pair(k, n);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto table = build_table(k, n);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(table));
  return *it->second;
}

}  // namespace

const KostkaTable& kostka_table(int k, int n) {
  if (k < 1) throw DomainError("level k must be at least 1");
  if (n < 0) throw DomainError("degree must be nonnegative");
  return cached_table(k, n);
}

const KostkaTable& schur_kostka_table(int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  return cached_table(0, n);
}

namespace {

// h_α = Σ_λ K(λ, α) b_λ.
SymFuncExpr expand_h(const SymFuncExpr& expr, Basis target, int k) {
  if (expr.basis != Basis::H) throw DomainError("expected an expression in the h basis");
  SymFuncExpr out(target, k);
  for (const auto& [alpha, c] : expr.coeffs) {
    if (target == Basis::KSchur) require_bounded(alpha, k);
    const KostkaTable& t = target == Basis::KSchur ? kostka_table(k, alpha.size())
                                                   : schur_kostka_table(alpha.size());
    const std::size_t j = t.index_of(alpha);
    for (std::size_t i = 0; i < t.basis.size(); ++i)
      if (t.kostka(i, j) != 0) out.add(t.basis[i], c * t.kostka(i, j));
  }
  return out;
}

SymFuncExpr collapse_to_h(const SymFuncExpr& expr) {
  SymFuncExpr out(Basis::H, expr.k);
  for (const auto& [lambda, c] : expr.coeffs) {
    const KostkaTable& t = expr.basis == Basis::KSchur ? kostka_table(expr.k, lambda.size())
                                                       : schur_kostka_table(lambda.size());
    const std::size_t i = t.index_of(lambda);
    for (std::size_t j = 0; j < t.basis.size(); ++j)
      if (t.s_in_h(i, j) != 0) out.add(t.basis[j], c * t.s_in_h(i, j));
  }
  return out;
}

void require_positive(const SymFuncExpr& e, const std::string& what) {
  if (!e.all_nonnegative_integers())
    throw InternalError("positivity violated in " + what + ": " + e.str());
}

}  // namespace

SymFuncExpr h_to_kschur(const SymFuncExpr& expr, int k) { return expand_h(expr, Basis::KSchur, k); }

SymFuncExpr kschur_to_h(const SymFuncExpr& expr) {
  if (expr.basis != Basis::KSchur) throw DomainError("expected an expression in a k-Schur basis");
  return collapse_to_h(expr);
}

SymFuncExpr h_to_schur(const SymFuncExpr& expr) { return expand_h(expr, Basis::Schur, 0); }

SymFuncExpr schur_to_h(const SymFuncExpr& expr) {
  if (expr.basis != Basis::Schur) throw DomainError("expected an expression in the Schur basis");
  return collapse_to_h(expr);
}

SymFuncExpr h_product(const SymFuncExpr& a, const SymFuncExpr& b) {
  if (a.basis != Basis::H || b.basis != Basis::H) throw DomainError("h_product expects h-basis inputs");
  SymFuncExpr out(Basis::H, std::max(a.k, b.k));
  for (const auto& [mu, x] : a.coeffs)
    for (const auto& [nu, y] : b.coeffs) {
      std::vector<int> parts = mu.parts();
      parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<>());
      out.add(Partition(std::move(parts)), x * y);
    }
  return out;
}

SymFuncExpr pieri(int r, const Partition& kappa, int k) {
  SymFuncExpr out(Basis::KSchur, k);
  for (const Partition& mu : weak_strips(kappa, r, k)) out.add(mu, 1);
  return out;
}

SymFuncExpr kschur_product(const Partition& kappa, const Partition& delta, int k) {
  const auto a = kschur_to_h(SymFuncExpr::single(Basis::KSchur, k, kappa));
  const auto b = kschur_to_h(SymFuncExpr::single(Basis::KSchur, k, delta));
  return h_to_kschur(h_product(a, b), k);
}

SymFuncExpr kschur_to_schur(const Partition& kappa, int k) {
  auto out = h_to_schur(kschur_to_h(SymFuncExpr::single(Basis::KSchur, k, kappa)));
  require_positive(out, "the Schur expansion of s" + std::to_string(k) + kappa.str());
  return out;
}

SymFuncExpr kschur_lift(const Partition& kappa, int k) {
  auto out = h_to_kschur(kschur_to_h(SymFuncExpr::single(Basis::KSchur, k, kappa)), k + 1);
  require_positive(out, "the level " + std::to_string(k + 1) + " expansion of s" + std::to_string(k) +
                            kappa.str());
  return out;
}

}  // namespace kschur
