#include "arthur/real.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace arthur {
namespace {

std::atomic<unsigned> g_precision_bits{kDefaultPrecisionBits};

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

struct InitialPrecision {
  InitialPrecision() { Real::default_precision(digits10_for_bits(kDefaultPrecisionBits)); }
} const g_initial_precision;

}  // namespace

unsigned working_precision() { return g_precision_bits.load(); }

PrecisionScope::PrecisionScope(unsigned bits) : previous_(g_precision_bits.load()) {
  if (bits < 32) throw std::invalid_argument("precision must be at least 32 bits");
  g_precision_bits.store(bits);
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() {
  g_precision_bits.store(previous_);
  Real::default_precision(digits10_for_bits(previous_));
}

Real pow2(long exponent) {
  Real r = 1;
  mpfr_mul_2si(r.backend().data(), r.backend().data(), exponent, MPFR_RNDN);
  return r;
}

Real default_tolerance() { return pow2(-static_cast<long>(working_precision() / 2)); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(long v) { return Real(v); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exponent = std::stol(text.substr(e + 1));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (char ch : mantissa) {
    if (ch == '.') {
      if (seen_point) throw std::invalid_argument("malformed number '" + text + "'");
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) ++scale;
    } else {
      throw std::invalid_argument("malformed number '" + text + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed number '" + text + "'");
  Integer num(digits);
  if (negative) num = -num;
  exponent -= scale;
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
  return exponent >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
}

Real const_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_euler() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_log2() {
  Real r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

std::string to_decimal(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios::scientific);
}

std::string to_decimal(const Real& x) {
  auto bits = static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
  bits = std::min(bits, working_precision());
  // digits after the point; one more leading digit precedes it
  return to_decimal(x, static_cast<unsigned>(std::floor(bits * 0.30102999566398120)) - 1);
}

std::string to_string(const Rational& q) { return q.str(); }

Real relative_difference(const Real& a, const Real& b) {
  Real diff = abs(a - b);
  Real scale = std::max(abs(a), abs(b));
  if (scale == 0) return diff;
  return diff / scale;
}

}  // namespace arthur
