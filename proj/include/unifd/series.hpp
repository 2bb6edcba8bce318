#pragma once

// Weight series of generators: Grunwald binomial weights, the J.C.P. Miller
// recurrence for P(z)^gamma, exact integer powers, and the ratio test used
// to decide whether a (d=2, p=2) fractional generator expands convergently.

#include <stdexcept>
#include <string>
#include <vector>

#include "unifd/explicit_form.hpp"
#include "unifd/polynomial.hpp"
#include "unifd/scalar.hpp"

namespace unifd {

/// beta_0^gamma has no exact value in the rational field.  Callers are
/// expected to retry in a float field.
class NonRationalPower : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The expansion has no real-valued series (e.g. beta_0 <= 0 with
/// fractional gamma).
class SeriesDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <FieldType T>
struct WeightSeries {
  T gamma;
  Polynomial<T> base;
  std::vector<T> weights;
  int truncation = 0;
};

/// g_k = (-1)^k C(alpha, k), the coefficients of (1 - z)^alpha.
template <FieldType T>
std::vector<T> grunwald_weights(const T& alpha, int count) {
  if (count < 1) throw std::invalid_argument("grunwald_weights: need at least one term");
  std::vector<T> g(count);
  g[0] = T(1);
  for (int k = 1; k < count; ++k) g[k] = T(g[k - 1] * (T(k - 1) - alpha) / T(k));
  return g;
}

namespace detail {

/// Exact b-th root of a non-negative integer, if there is one.
bool exact_integer_root(const BigInt& v, unsigned long b, BigInt& root);

}  // namespace detail

/// beta0^gamma in the field T.
template <FieldType T>
T real_power(const T& beta0, const T& gamma) {
  if (is_integer(gamma)) {
    if (beta0 == T(0) && gamma < T(0)) throw SeriesDomainError("zero base with negative exponent");
    if constexpr (std::is_same_v<T, Rational>) {
      return int_power(beta0, boost::multiprecision::numerator(gamma).template convert_to<long long>());
    } else {
      return int_power(beta0, static_cast<long long>(to_double(gamma)));
    }
  }
  if (!(beta0 > T(0)))
    throw SeriesDomainError("fractional power of P(z) requires beta_0 > 0 for a real expansion");
  if constexpr (std::is_same_v<T, Rational>) {
    const BigInt a = boost::multiprecision::numerator(gamma);
    const BigInt b = boost::multiprecision::denominator(gamma);
    if (b > 1'000'000) throw NonRationalPower("root degree too large for exact evaluation");
    const auto degree = b.template convert_to<unsigned long>();
    BigInt num_root, den_root;
    if (!detail::exact_integer_root(boost::multiprecision::numerator(beta0), degree, num_root) ||
        !detail::exact_integer_root(boost::multiprecision::denominator(beta0), degree, den_root))
      throw NonRationalPower("beta_0^gamma = (" + format_rational(beta0) + ")^(" +
                             format_rational(gamma) + ") is irrational; use a float field");
    return int_power(Rational(num_root, den_root), a.template convert_to<long long>());
  } else {
    using std::exp;
    using std::log;
    return T(exp(gamma * log(beta0)));
  }
}

/// Power-series coefficients w_0..w_{K-1} of base(z)^gamma:
///   w_0 = beta_0^gamma,
///   w_m = 1/(m beta_0) sum_{k=1}^{min(m, deg)} (k(gamma+1) - m) beta_k w_{m-k}.
template <FieldType T>
WeightSeries<T> miller_expand(const Polynomial<T>& base, const T& gamma, int count) {
  if (count < 1) throw std::invalid_argument("miller_expand: need at least one term");
  if (base.size() == 0 || base[0] == T(0))
    throw SeriesDomainError("miller_expand: beta_0 must be nonzero");
  const T& beta0 = base[0];
  WeightSeries<T> out{gamma, base, std::vector<T>(count), count};
  auto& w = out.weights;
  w[0] = real_power(beta0, gamma);
  const int deg = base.degree();
  const T gamma1 = T(gamma + T(1));
  for (int m = 1; m < count; ++m) {
    T acc(0);
    const int top = std::min(m, deg);
    for (int k = 1; k <= top; ++k) acc += T(T(k) * gamma1 - T(m)) * base[k] * w[m - k];
    w[m] = T(acc / (T(m) * beta0));
  }
  return out;
}

/// base(z)^n by repeated convolution; degree n * deg(base).
template <FieldType T>
Polynomial<T> poly_power_int(const Polynomial<T>& base, int n) {
  if (n < 1) throw std::invalid_argument("poly_power_int: exponent must be a positive integer");
  Polynomial<T> out = base;
  for (int i = 1; i < n; ++i) out = out * base;
  return out;
}

template <FieldType T>
struct ConvergenceReport {
  bool beta0_positive = false;
  T edge_ratio;  // |beta_{N-1} / beta_0|
  bool converges_on_unit_disk = false;
  /// True when P(z) is not from the (d=2, p=2) family, for which the
  /// factorization (1-z)^2 (beta_0 + beta_3 z) behind the test is known.
  bool advisory = false;
};

template <FieldType T>
ConvergenceReport<T> convergence_diagnostic(const CoefficientVector<T>& cv) {
  const auto& beta = cv.beta;
  if (beta.empty() || beta.front() == T(0))
    throw std::invalid_argument("convergence_diagnostic: beta_0 is zero");
  ConvergenceReport<T> rep;
  rep.beta0_positive = beta.front() > T(0);
  rep.edge_ratio = abs_value(T(beta.back() / beta.front()));
  rep.converges_on_unit_disk = rep.beta0_positive && rep.edge_ratio < T(1);
  rep.advisory = !(cv.params.d == 2 && cv.params.p == 2);
  return rep;
}

}  // namespace unifd
