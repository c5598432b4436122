#include "prymslope/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace prym {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
    }
  }
  Integer value(std::string(text.substr(start)));
  return text.front() == '-' ? Integer(-value) : value;
}

}  // namespace

std::string to_fraction(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const Integer num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) {
    throw std::invalid_argument("negative digit count");
  }
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = magnitude * scale;
  const Integer num = boost::multiprecision::numerator(scaled);
  const Integer den = boost::multiprecision::denominator(scaled);
  Integer rounded = num / den;
  if (2 * (num % den) >= den) rounded += 1;

  std::string digits_str = rounded.str();
  if (static_cast<int>(digits_str.size()) <= digits) {
    digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
  }
  std::string out = negative && rounded != 0 ? "-" : "";
  out += digits_str.substr(0, digits_str.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out += ".";
    out += digits_str.substr(digits_str.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

std::string to_mixed(const Rational& value) {
  if (value < 0) return "-(" + to_mixed(Rational(-value)) + ")";
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  const Integer whole = num / den;
  const Integer rest = num % den;
  if (rest == 0) return whole.str();
  if (whole == 0) return rest.str() + "/" + den.str();
  return whole.str() + "+" + rest.str() + "/" + den.str();
}

Rational pow2(int k) {
  if (k >= 0) return Rational(Integer(1) << k);
  return Rational(Integer(1), Integer(1) << -k);
}

}  // namespace prym
