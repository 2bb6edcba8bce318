#pragma once

// Unified explicit coefficients of difference generators
//
//   W(z) = (beta_0 + beta_1 z + ... + beta_{N-1} z^{N-1})^{alpha/d}
//
// for a derivative of order alpha approximated with accuracy p and shift r
// on top of a base differential operator of integer order d.  With
// lambda = r d / alpha and N = p + d the coefficients are
//
//   beta_j = N_j / D_j,
//   N_j    = e_{p-1}({lambda - k : k != j}),
//   D_j    = (-1)^{p-1-j} j! (N-1-j)! / d!,
//
// and they are the unique solution of
//
//   sum_j (lambda - j)^k beta_j = d! [k == d],   k = 0 .. N-1.

#include <map>
#include <stdexcept>
#include <vector>

#include "unifd/op_count.hpp"
#include "unifd/polynomial.hpp"
#include "unifd/scalar.hpp"

namespace unifd {

template <FieldType T>
struct ApproxParams {
  T alpha;       // derivative order, > 0
  int d = 1;     // base differential order
  int p = 1;     // approximation order
  T r;           // shift
  T lambda;      // r d / alpha
  int n_coeffs;  // p + d

  T gamma() const { return T(alpha / T(d)); }
};

template <FieldType T>
ApproxParams<T> derive_params(const T& alpha, int d, int p, const T& r) {
  if (!(alpha > T(0))) throw std::invalid_argument("derivative order alpha must be positive");
  if (d < 1) throw std::invalid_argument("base order d must be >= 1");
  if (p < 1) throw std::invalid_argument("approximation order p must be >= 1");
  return ApproxParams<T>{alpha, d, p, r, T(r * T(d) / alpha), p + d};
}

/// D_0..D_{N-1} for (d, p) in exact arithmetic. Cached; thread safe.
std::vector<Rational> denominator_table(int d, int p);

template <FieldType T>
std::vector<T> denominators(int d, int p) {
  const auto table = denominator_table(d, p);
  std::vector<T> out;
  out.reserve(table.size());
  for (const auto& q : table) out.push_back(from_rational<T>(q));
  return out;
}

/// N_0..N_{N-1} via the product-polynomial recurrences: M_0(x) is built by
/// multiplying in factors (x + x_m), then each M_j is obtained from M_{j-1}
/// by adding the factor for x_{j-1} and removing the one for x_j.  N_j is
/// the coefficient of x^d in M_j.  O(N^2) work.
template <FieldType T>
std::vector<T> numerators(const ApproxParams<T>& params, OpCount* tally = nullptr) {
  const int n = params.n_coeffs;
  const int d = params.d;
  std::vector<T> x(n);
  for (int m = 0; m < n; ++m) x[m] = T(params.lambda - T(m));

  OpCount ops;
  // p[k] is the coefficient of x^k; p[n] stays zero as a sentinel.
  std::vector<T> p(n + 1, T(0));
  p[0] = T(1);
  for (int m = 1; m < n; ++m) {
    for (int k = m; k >= 1; --k) {
      p[k] = T(p[k - 1] + x[m] * p[k]);
      ++ops.additions;
      ++ops.multiplications;
    }
    p[0] = T(x[m] * p[0]);
    ++ops.multiplications;
  }

  std::vector<T> out(n);
  out[0] = p[d];

  std::vector<T> q(n + 1, T(0));
  for (int j = 1; j < n; ++j) {
    q[n] = T(0);
    for (int k = n - 1; k >= 0; --k) {
      q[k] = T(p[k] + x[j - 1] * p[k + 1] - x[j] * q[k + 1]);
      ops.additions += 2;
      ops.multiplications += 2;
    }
    std::swap(p, q);
    out[j] = p[d];
  }
  if (tally) {
    tally->additions += ops.additions;
    tally->multiplications += ops.multiplications;
  }
  return out;
}

template <FieldType T>
struct CoefficientVector {
  ApproxParams<T> params;
  std::vector<T> beta;
  std::vector<T> numerators;
  std::vector<T> denominators;
};

template <FieldType T>
CoefficientVector<T> beta_coefficients(const ApproxParams<T>& params) {
  CoefficientVector<T> cv{params, {}, numerators(params), denominators<T>(params.d, params.p)};
  cv.beta.reserve(cv.numerators.size());
  for (std::size_t j = 0; j < cv.numerators.size(); ++j)
    cv.beta.push_back(T(cv.numerators[j] / cv.denominators[j]));
  return cv;
}

/// Coefficients a_m of h^m (m = p .. p+count-1) in the error expansion
/// Delta f = D^alpha f + sum_m h^m a_m D^{alpha+m} f + ...
template <FieldType T>
struct ErrorCoefficients {
  ApproxParams<T> params;
  std::map<int, T> a;

  const T& leading() const { return a.at(params.p); }
  /// Leading term vanishes: the formula is of higher order than requested.
  bool superconvergent() const { return a.count(params.p) && a.at(params.p) == T(0); }
};

/// sum_j (lambda - j)^k beta_j
template <FieldType T>
T power_moment(const CoefficientVector<T>& cv, int k) {
  T acc(0);
  for (std::size_t j = 0; j < cv.beta.size(); ++j)
    acc += int_power(T(cv.params.lambda - T(static_cast<long long>(j))), k) * cv.beta[j];
  return acc;
}

/// a_m = (alpha/d) / (m+d)! * sum_j (lambda - j)^{m+d} beta_j. Only
/// m < 2p is available; beyond that the expansion picks up X^2 terms.
template <FieldType T>
ErrorCoefficients<T> error_coefficients(const CoefficientVector<T>& cv, int count) {
  const auto& pr = cv.params;
  if (count < 0) throw std::invalid_argument("error coefficient count must be non-negative");
  if (count > pr.p)
    throw std::invalid_argument("error coefficients beyond a_{2p-1} need the neglected X^2 terms (count > p)");
  ErrorCoefficients<T> out{pr, {}};
  const T gamma = pr.gamma();
  for (int m = pr.p; m < pr.p + count; ++m) {
    const T fact = from_rational<T>(factorial(m + pr.d));
    out.a.emplace(m, T(gamma * power_moment(cv, m + pr.d) / fact));
  }
  return out;
}

/// P(z) = beta_0 + ... + beta_{N-1} z^{N-1}; the generator is P(z)^{alpha/d}.
template <FieldType T>
Polynomial<T> generator_polynomial(const CoefficientVector<T>& cv) {
  return Polynomial<T>(cv.beta);
}

}  // namespace unifd
