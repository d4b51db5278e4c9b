#include "kschur/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kschur/error.hpp"

namespace kschur {

namespace {

int degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "r" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

// Term with its sign stripped, plus whether it was negative.
std::string abs_term_str(const Monomial& m, const Rational& c, bool& negative) {
  negative = sgn(c) < 0;
  const Rational a = abs(c);
  if (m.empty()) return to_string(a);
  if (a == 1) return monomial_str(m);
  return to_string(a) + "*" + monomial_str(m);
}

}  // namespace

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < a.size() ? a[i] : 0;
    const int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(int a) {
  if (a < 1) throw DomainError("variables are indexed from 1");
  Monomial m(a, 0);
  m[a - 1] = 1;
  return monomial(std::move(m));
}

MultiPoly MultiPoly::monomial(Monomial exps, const Rational& coeff) {
  for (int e : exps)
    if (e < 0) throw DomainError("negative exponent");
  trim(exps);
  MultiPoly p;
  p.add_term(exps, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first);
}

int MultiPoly::num_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return static_cast<int>(n);
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a polynomial");
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
      if (m[i] == 0) continue;
      if (i >= values.size()) {
        term = 0;
        break;
      }
      for (int e = 0; e < m[i]; ++e) term *= values[i];
    }
    total += term;
  }
  return total;
}

double MultiPoly::evaluate(const std::vector<double>& values) const {
  double total = 0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      term *= i < values.size() ? std::pow(values[i], m[i]) : 0.0;
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= subs.size()) throw DomainError("substitution misses variable r" + std::to_string(i + 1));
      term *= subs[i].pow(m[i]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::reverse_variables(int k) const {
  if (num_vars() > k) throw DomainError("polynomial uses variables beyond r" + std::to_string(k));
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rev(k, 0);
    for (std::size_t i = 0; i < m.size(); ++i) rev[k - 1 - i] = m[i];
    trim(rev);
    out.add_term(rev, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool negative = false;
    const std::string body = abs_term_str(it->first, it->second, negative);
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

const MultiPoly UniPoly::kZero{};

UniPoly::UniPoly(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const MultiPoly& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

MultiPoly UniPoly::evaluate(const MultiPoly& t) const {
  MultiPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational UniPoly::evaluate(const Rational& t, const std::vector<Rational>& r) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->evaluate(r);
  return acc;
}

double UniPoly::evaluate(double t, const std::vector<double>& r) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->evaluate(r);
  return acc;
}

UniPoly UniPoly::reverse_variables(int k) const {
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.reverse_variables(k));
  return UniPoly(std::move(out));
}

std::string UniPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const MultiPoly& c = coeffs_[i];
    if (c.is_zero()) continue;
    const std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    bool negative = false;
    std::string body;
    if (c.terms().size() == 1) {
      const auto& [m, coeff] = *c.terms().begin();
      body = abs_term_str(m, coeff, negative);
      if (!power.empty()) body = (body == "1") ? power : body + "*" + power;
    } else {
      body = "(" + c.str() + ")";
      if (!power.empty()) body += "*" + power;
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace kschur
