#include <bipcount/numeric.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace bipcount {

Integer pow2(unsigned long e) {
  Integer x;
  mpz_ui_pow_ui(x.get_mpz_t(), 2, e);
  return x;
}

double ln(const Integer& x) {
  if (sgn(x) <= 0) return std::numeric_limits<double>::quiet_NaN();
  // x = mantissa * 2^exp with mantissa in [0.5, 1), rounded to 53 bits.
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp) * std::numbers::ln2;
}

double ln(const Rational& x) {
  if (sgn(x) <= 0) return std::numeric_limits<double>::quiet_NaN();
  return ln(Integer(x.get_num())) - ln(Integer(x.get_den()));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

std::string to_decimal(const Rational& x, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer scaled = x.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());

  const bool negative = sgn(x) < 0;
  Integer mag = abs(scaled);
  std::string s = mag.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace bipcount
