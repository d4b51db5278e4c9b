#include "kschur/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "kschur/error.hpp"

namespace kschur {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return out;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  const std::string text = trim(raw);
  const auto bad = [&] { return DomainError("cannot parse '" + raw + "' as a rational number"); };
  if (text.empty()) throw bad();

  if (text.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }

  std::string body = text;
  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string::npos) {
    std::string exp_text = body.substr(e + 1);
    body = body.substr(0, e);
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (used != exp_text.size()) throw bad();
  }
  std::string int_part = body;
  std::string frac_part;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw bad();
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
    throw bad();

  const mpz_class digits((int_part.empty() ? "0" : int_part) + frac_part, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational q(digits);
  if (exponent > 0) q *= pow10(exponent);
  if (exponent < 0) q /= pow10(-exponent);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw DomainError("empty list of numbers");
  return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made exact");
  return Rational(x);
}

}  // namespace kschur
