#include "redform/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace redform {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string num_digits = num;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+'))
    num_digits = num_digits.substr(1);
  if (!all_digits(num_digits) || !all_digits(den))
    throw std::invalid_argument("bad rational: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace redform
