#pragma once

// Number fields used throughout the library.
//
// Every algorithm is a template over one of three realizations:
//   Rational  exact, arbitrary precision (GMP), always in lowest terms
//   double    IEEE binary64
//   BigFloat  MPFR float whose precision is set in decimal digits
//
// `Scalar` is the run-time tagged form used at the parsing/formatting
// boundary (CLI, JSON output).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

namespace unifd {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

enum class Field { rational, f64, big };

using Scalar = std::variant<Rational, double, BigFloat>;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinDigits = 15;

/// Thrown for malformed numeric text, zero denominators and mixed-field
/// comparisons.
class ScalarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sets the working precision of BigFloat values created on this thread and
/// restores the previous one on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept FieldType = std::is_same_v<T, Rational> || std::is_same_v<T, double> ||
                    std::is_same_v<T, BigFloat>;

/// Correctly rounded (nearest) conversion.
double to_double(const Rational& q);

template <FieldType T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else if constexpr (std::is_same_v<T, double>) {
    return to_double(q);
  } else {
    return BigFloat(q);
  }
}

template <FieldType T>
T from_int(long long v) {
  return T(v);
}

template <FieldType T>
double to_double(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return to_double(v);
  } else if constexpr (std::is_same_v<T, double>) {
    return v;
  } else {
    return v.template convert_to<double>();
  }
}

template <FieldType T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

Rational floor_rational(const Rational& q);

template <FieldType T>
T floor_value(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return floor_rational(v);
  } else {
    using std::floor;
    return T(floor(v));
  }
}

template <FieldType T>
bool is_integer(const T& v) {
  return floor_value(v) == v;
}

/// v^n for integer n (negative n allowed for nonzero v).
template <FieldType T>
T int_power(const T& v, long long n) {
  if (n < 0) return T(1) / int_power(v, -n);
  T result(1);
  T base = v;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Rational factorial(int n);

/// Parses an integer ("-3"), a fraction ("3/2") or a decimal literal
/// ("1.6", "-2.5e-3"). Rational mode is exact; float modes round to nearest.
Scalar parse_scalar(std::string_view text, Field field);
Rational parse_rational(std::string_view text);

std::string format_rational(const Rational& q);
std::string format_double(double v);
std::string format_bigfloat(const BigFloat& v, int digits = 0);
std::string format_scalar(const Scalar& s);

template <FieldType T>
std::string format_value(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return format_rational(v);
  } else if constexpr (std::is_same_v<T, double>) {
    return format_double(v);
  } else {
    return format_bigfloat(v);
  }
}

Field field_of(const Scalar& s);
std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// Rational values compare exactly (rel_tol ignored); float values compare
/// |a - b| <= rel_tol * max(1, |b|). Throws ScalarError on mixed fields.
bool approx_equal(const Scalar& a, const Scalar& b, const Scalar& rel_tol);

template <FieldType T>
T get_as(const Scalar& s) {
  if (const T* v = std::get_if<T>(&s)) return *v;
  throw ScalarError("scalar is not in the requested field");
}

}  // namespace unifd
