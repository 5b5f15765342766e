#include "normlab/types.hpp"

#include <gmp.h>

#include <stdexcept>

#include "normlab/error.hpp"

namespace normlab {

namespace {

// Decimal integer with optional sign. Boost would read a leading 0 as octal.
Integer parse_integer(std::string text) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::kParseError, "not an integer: '" + text + "'");
  }
  auto const first = text.find_first_not_of('0');
  Integer value = first == std::string::npos ? Integer(0) : Integer(text.substr(first));
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string to_string(Rational const& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string const& text) {
  try {
    auto const slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer const den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator");
    return Rational(parse_integer(text.substr(0, slash)), den);
  } catch (Error const&) {
    throw Error(ErrorCode::kParseError, "not a rational: '" + text + "'");
  }
}

Rational parse_decimal(std::string const& text) {
  if (text.find('/') != std::string::npos) return parse_rational(text);
  std::string mantissa = text;
  long exponent = 0;
  auto const e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mantissa = text.substr(0, e);
    try {
      std::size_t used = 0;
      exponent = std::stol(text.substr(e + 1), &used);
      if (used != text.size() - e - 1) throw std::invalid_argument("trailing");
    } catch (std::exception const&) {
      throw Error(ErrorCode::kParseError, "not a decimal: '" + text + "'");
    }
  }
  auto const dot = mantissa.find('.');
  std::string digits = mantissa;
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  }
  Integer mantissa_value;
  try {
    mantissa_value = parse_integer(digits);
  } catch (Error const&) {
    throw Error(ErrorCode::kParseError, "not a decimal: '" + text + "'");
  }
  if (exponent > 100000 || exponent < -100000) {
    throw Error(ErrorCode::kParseError, "exponent out of range: '" + text + "'");
  }
  Rational value{mantissa_value};
  Integer const scale = pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? value / scale : value * scale;
}

bool is_prime(Integer const& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.backend().data(), 40) > 0;
}

Integer next_prime(Integer const& n) {
  Integer result;
  mpz_nextprime(result.backend().data(), n.backend().data());
  return result;
}

int valuation(Integer const& n, Integer const& p) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "valuation of zero");
  Integer m = abs(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(Rational const& q, Integer const& p) {
  return valuation(numerator(q), p) - valuation(denominator(q), p);
}

Integer pow(Integer const& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational pow(Rational const& base, int exponent) {
  if (exponent >= 0) {
    auto const e = static_cast<unsigned>(exponent);
    return Rational(pow(numerator(base), e), pow(denominator(base), e));
  }
  if (base == 0) throw Error(ErrorCode::kInvalidArgument, "0 to negative power");
  auto const e = static_cast<unsigned>(-exponent);
  return Rational(pow(denominator(base), e), pow(numerator(base), e));
}

Integer mod(Integer const& a, Integer const& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer symmetric_mod(Integer const& a, Integer const& m) {
  Integer r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Integer inverse_mod(Integer const& a, Integer const& m) {
  Integer result;
  Integer const reduced = mod(a, m);
  if (mpz_invert(result.backend().data(), reduced.backend().data(),
                 m.backend().data()) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "element not invertible mod m");
  }
  return result;
}

int legendre(Integer const& a, Integer const& p) {
  Integer const reduced = mod(a, p);
  return mpz_legendre(reduced.backend().data(), p.backend().data());
}

}  // namespace normlab
