#include "hardy/symbolic/rational.hpp"

#include <cctype>
#include <cmath>

#include "hardy/errors.hpp"

namespace hardy::sym {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(n, d);
    result.canonicalize();
  } else {
    long exponent = 0;
    auto epos = s.find_first_of("eE");
    std::string_view mantissa = s.substr(0, epos);
    if (epos != std::string_view::npos) {
      std::string_view es = s.substr(epos + 1);
      bool eneg = false;
      if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
        eneg = es.front() == '-';
        es.remove_prefix(1);
      }
      if (!all_digits(es) || es.size() > 6)
        throw ParseError("malformed exponent in '" + std::string(text) + "'");
      exponent = std::stol(std::string(es));
      if (eneg) exponent = -exponent;
    }
    std::string digits;
    auto dot = mantissa.find('.');
    if (dot != std::string_view::npos) {
      auto ip = mantissa.substr(0, dot);
      auto fp = mantissa.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
          (!fp.empty() && !all_digits(fp)))
        throw ParseError("malformed number '" + std::string(text) + "'");
      digits = std::string(ip) + std::string(fp);
      exponent -= static_cast<long>(fp.size());
    } else {
      if (!all_digits(mantissa)) throw ParseError("malformed number '" + std::string(text) + "'");
      digits = std::string(mantissa);
    }
    mpz_class n(digits, 10);
    if (exponent >= 0) {
      result = Rational(n * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(n, pow10(static_cast<unsigned long>(-exponent)));
      result.canonicalize();
    }
  }
  return negative ? Rational(-result) : result;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert non-finite double to rational");
  Rational q(value);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) {
  // Exact operands make the quotient correctly rounded; get_d truncates.
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 53)
    return q.get_num().get_d() / q.get_den().get_d();
  return q.get_d();
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hardy::sym
