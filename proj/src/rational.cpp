#include "pafdp/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

namespace pafdp {

std::optional<Rational> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      return std::nullopt;
    }
  }
  if (digits.empty()) return std::nullopt;
  mpz_class numerator(digits, 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::optional<std::string> exact_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  std::size_t twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;

  const std::size_t scale = std::max(twos, fives);
  mpz_class factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), 10, scale);
  mpz_class scaled = value.get_num() * factor / value.get_den();
  std::string out;
  if (scaled < 0) {
    out.push_back('-');
    scaled = -scaled;
  }
  std::string body = scaled.get_str(10);
  if (scale == 0) return out + body;
  if (body.size() <= scale) body.insert(0, scale - body.size() + 1, '0');
  body.insert(body.size() - scale, 1, '.');
  return out + body;
}

std::string fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::string significant_decimal(const Rational& value, int digits) {
  if (value == 0) return "0";
  // 30 extra decimal digits of headroom in the mantissa.
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>((digits + 30) * 4);
  mpf_class approx(value, bits);
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", digits, approx.get_mpf_t());
  return buffer.data();
}

std::string significant_decimal(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

}  // namespace pafdp
