#include "causatum/rational.hpp"

#include <cctype>
#include <sstream>

#include "causatum/errors.hpp"

namespace causatum {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw DomainError("empty numeric literal: '" + text + "'");

  Rational value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw DomainError("bad rational literal: '" + text + "'");
    }
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator: '" + text + "'");
    value = Rational(Integer(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw DomainError("bad decimal literal: '" + text + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(Integer(whole) * scale + Integer(frac), scale);
  } else {
    if (!all_digits(s)) throw DomainError("bad integer literal: '" + text + "'");
    value = Rational(Integer(s));
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& value) {
  std::ostringstream os;
  os << value;  // cpp_rational prints "n/d", or "n" when the denominator is 1
  return os.str();
}

Integer pow2(unsigned exponent) {
  return Integer(1) << exponent;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace causatum
