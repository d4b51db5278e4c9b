#pragma once

#include <map>
#include <string>
#include <vector>

#include "kschur/rational.hpp"

namespace kschur {

/// Exponent vector without trailing zeros; index a-1 holds the power of r_a.
using Monomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// r_1 > r_2 > ... (shorter vectors are padded with zeros).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in r_1, r_2, ... with rational coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(int c) : MultiPoly(Rational(c)) {}

  /// r_a, 1-indexed.
  static MultiPoly variable(int a);
  static MultiPoly monomial(Monomial exps, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  /// Largest variable index that appears.
  int num_vars() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(MultiPoly a, int c) { return a *= Rational(c); }
  friend MultiPoly operator*(int c, MultiPoly a) { return a *= Rational(c); }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly pow(int e) const;

  /// Variables beyond values.size() evaluate to 0.
  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;
  /// r_a ↦ subs[a-1].
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;
  /// r_a ↦ r_{k+1-a}.
  MultiPoly reverse_variables(int k) const;

  /// Terms in decreasing graded-lex order, e.g. "2*r1^2*r3 - 1/2*r2 + 3".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

/// Polynomial in T whose coefficients are MultiPoly; coeffs[i] multiplies T^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<MultiPoly> coeffs);

  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const MultiPoly& coeff(int i) const;

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  MultiPoly evaluate(const MultiPoly& t) const;
  Rational evaluate(const Rational& t, const std::vector<Rational>& r) const;
  double evaluate(double t, const std::vector<double>& r) const;
  UniPoly reverse_variables(int k) const;

  /// "T^6 + (-2*r1 - 2*r3)*T^3 - 4*r2*T^2 + (r1^2 - 2*r1*r3 + r3^2)".
  std::string str(const std::string& var = "T") const;

 private:
  std::vector<MultiPoly> coeffs_;
  static const MultiPoly kZero;
};

}  // namespace kschur
