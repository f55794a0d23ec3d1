#include "nebc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nebc {

BigInt rat_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

BigInt rat_ceil(const Rational& r) { return -rat_floor(-r); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_big(std::string_view s) {
  if (!all_digits(s)) throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

BigInt pow10(size_t k) {
  BigInt p = 1;
  for (size_t i = 0; i < k; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_big(s.substr(0, slash));
    BigInt den = parse_big(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    BigInt whole = ip.empty() ? BigInt(0) : parse_big(ip);
    BigInt frac = fp.empty() ? BigInt(0) : parse_big(fp);
    BigInt scale = pow10(fp.size());
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(parse_big(s));
  }
  if (negative) value = -value;
  return value;
}

std::string rat_str(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt d = 1;
  for (const Rational& v : values) d = boost::multiprecision::lcm(d, denominator(v));
  return d;
}

}  // namespace nebc
