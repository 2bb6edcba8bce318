#include "unifd/scalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <charconv>
#include <cctype>

namespace unifd {

PrecisionScope::PrecisionScope(unsigned digits)
    : saved_(BigFloat::default_precision()) {
  if (digits < kMinDigits) {
    throw ScalarError("BigFloat precision must be at least " +
                      std::to_string(kMinDigits) + " digits");
  }
  BigFloat::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_); }

double to_double(const Rational& q) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q.backend().data(), MPFR_RNDN);
  const double v = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return v;
}

Rational floor_rational(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return Rational(quot);
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt acc = 1;
  for (int k = 2; k <= n; ++k) acc *= k;
  return Rational(acc);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ScalarError("malformed integer '" + std::string(s) + "'");
  // a leading 0 would select octal
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

// [sign] digits [. digits] [(e|E) [sign] digits]
Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw ScalarError("malformed exponent in '" + original + "'");
    exponent = std::stoll(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw ScalarError("malformed decimal '" + original + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw ScalarError("malformed number '" + original + "'");
    digits = std::string(s);
  }
  const auto nonzero = digits.find_first_not_of('0');
  digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero);
  Rational v{BigInt(digits)};
  const Rational scale{boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(
                                                      exponent < 0 ? -exponent : exponent))};
  v = exponent < 0 ? Rational(v / scale) : Rational(v * scale);
  return negative ? Rational(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ScalarError("empty numeric literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(trim(s.substr(0, slash)));
    const BigInt den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw ScalarError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  return parse_decimal(s);
}

Scalar parse_scalar(std::string_view text, Field field) {
  const std::string_view s = trim(text);
  switch (field) {
    case Field::rational:
      return parse_rational(s);
    case Field::f64: {
      if (s.find('/') != std::string_view::npos) return to_double(parse_rational(s));
      // Validate the grammar first so that "inf", "0x1p3" etc. are rejected.
      (void)parse_rational(s);
      std::string_view body = s;
      if (!body.empty() && body.front() == '+') body.remove_prefix(1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc() || ptr != body.data() + body.size())
        throw ScalarError("malformed number '" + std::string(s) + "'");
      return v;
    }
    case Field::big: {
      const Rational q = parse_rational(s);
      if (s.find('/') != std::string_view::npos) return BigFloat(q);
      std::string body(s);
      if (!body.empty() && body.front() == '+') body.erase(0, 1);
      return BigFloat(body);
    }
  }
  throw ScalarError("unknown field");
}

std::string format_rational(const Rational& q) { return q.str(); }

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_bigfloat(const BigFloat& v, int digits) {
  if (digits <= 0) digits = static_cast<int>(v.precision());
  return v.str(digits, std::ios_base::scientific);
}

std::string format_scalar(const Scalar& s) {
  return std::visit([](const auto& v) { return format_value(v); }, s);
}

Field field_of(const Scalar& s) {
  switch (s.index()) {
    case 0: return Field::rational;
    case 1: return Field::f64;
    default: return Field::big;
  }
}

std::string_view field_name(Field f) {
  switch (f) {
    case Field::rational: return "rational";
    case Field::f64: return "f64";
    case Field::big: return "big";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name == "rational") return Field::rational;
  if (name == "f64") return Field::f64;
  if (name == "big") return Field::big;
  throw ScalarError("unknown arithmetic mode '" + std::string(name) + "'");
}

bool approx_equal(const Scalar& a, const Scalar& b, const Scalar& rel_tol) {
  if (a.index() != b.index())
    throw ScalarError("approx_equal: mixed realizations");
  if (const auto* qa = std::get_if<Rational>(&a)) return *qa == std::get<Rational>(b);

  auto compare = [](const auto& x, const auto& y, const auto& tol) {
    using T = std::decay_t<decltype(x)>;
    if (!(tol > T(0))) throw ScalarError("approx_equal: rel_tol must be positive");
    const T scale = std::max(T(1), T(abs_value(y)));
    return abs_value(T(x - y)) <= tol * scale;
  };
  if (const auto* da = std::get_if<double>(&a)) {
    double tol = 0.0;
    if (const auto* t = std::get_if<double>(&rel_tol)) tol = *t;
    else if (const auto* t = std::get_if<Rational>(&rel_tol)) tol = to_double(*t);
    else tol = std::get<BigFloat>(rel_tol).convert_to<double>();
    return compare(*da, std::get<double>(b), tol);
  }
  BigFloat tol;
  if (const auto* t = std::get_if<BigFloat>(&rel_tol)) tol = *t;
  else if (const auto* t = std::get_if<Rational>(&rel_tol)) tol = BigFloat(*t);
  else tol = BigFloat(std::get<double>(rel_tol));
  return compare(std::get<BigFloat>(a), std::get<BigFloat>(b), tol);
}

}  // namespace unifd
