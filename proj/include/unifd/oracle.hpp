#pragma once

// Brute-force reference implementations.  Deliberately slow and direct:
// Cramer's rule on the Vandermonde system, full combinatorial sums for the
// elementary symmetric polynomials, and determinants by elimination.
// Nothing here calls into explicit_form's numerator/denominator algorithms.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unifd/explicit_form.hpp"
#include "unifd/matrix.hpp"
#include "unifd/op_count.hpp"
#include "unifd/scalar.hpp"

namespace unifd::oracle {

inline constexpr std::uint64_t kDefaultOpBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Determinant by fraction-free (Bareiss) elimination; exact for Rational.
template <FieldType T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == T(0)) ++swap_row;
      if (swap_row == n) return T(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = T(-sign);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = T((a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev);
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  return T(sign * a(n - 1, n - 1));
}

/// Column j is (1, x_j, x_j^2, ..., x_j^{n-1})^T.
template <FieldType T>
Matrix<T> vandermonde_matrix(const std::vector<T>& xs) {
  const std::size_t n = xs.size();
  Matrix<T> v(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    T power(1);
    for (std::size_t k = 0; k < n; ++k) {
      v(k, j) = power;
      power *= xs[j];
    }
  }
  return v;
}

/// prod_{i<j} (x_j - x_i)
template <FieldType T>
T vandermonde_determinant_product(const std::vector<T>& xs) {
  T acc(1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) acc *= T(xs[j] - xs[i]);
  return acc;
}

/// Vandermonde variant U_k: for q+1 parameters, rows carry powers
/// 0..k-1, k+1..q+1 (the k-th power is skipped).
template <FieldType T>
Matrix<T> variant_vandermonde_matrix(const std::vector<T>& xs, int k) {
  const std::size_t n = xs.size();
  if (k < 0 || static_cast<std::size_t>(k) > n)
    throw std::invalid_argument("variant Vandermonde: skipped power out of range");
  Matrix<T> u(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t row = 0;
    for (std::size_t power = 0; power <= n; ++power) {
      if (power == static_cast<std::size_t>(k)) continue;
      u(row++, j) = int_power(xs[j], static_cast<long long>(power));
    }
  }
  return u;
}

/// S(X, k): sum over all k-subsets of the product of their elements.
/// Each subset costs k multiplications (starting from 1) and one addition.
template <FieldType T>
T esp_direct(const std::vector<T>& xs, int k, OpCount* tally = nullptr) {
  const int n = static_cast<int>(xs.size());
  if (k < 0 || k > n) throw std::invalid_argument("esp_direct: k out of range");
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  T sum(0);
  OpCount ops;
  while (true) {
    T term(1);
    for (int i : idx) {
      term *= xs[i];
      ++ops.multiplications;
    }
    sum += term;
    ++ops.additions;
    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  if (tally) {
    tally->additions += ops.additions;
    tally->multiplications += ops.multiplications;
  }
  return sum;
}

/// C(n, k) as an unsigned count; saturates at UINT64_MAX.
std::uint64_t binomial_count(int n, int k);

/// Every N_j by full enumeration, with the tallied cost.  Refuses when the
/// number of terms M*N (M = C(N-1, p-1)) exceeds `budget`.
template <FieldType T>
std::pair<std::vector<T>, OpCount> numerators_direct(const ApproxParams<T>& params,
                                                     std::uint64_t budget = kDefaultOpBudget) {
  const int n = params.n_coeffs;
  const std::uint64_t m = binomial_count(n - 1, params.p - 1);
  if (m > budget / static_cast<std::uint64_t>(n))
    throw BudgetExceeded("direct numerator enumeration exceeds the operation budget");
  std::vector<T> out;
  out.reserve(n);
  OpCount ops;
  for (int j = 0; j < n; ++j) {
    std::vector<T> others;
    others.reserve(n - 1);
    for (int k = 0; k < n; ++k)
      if (k != j) others.push_back(T(params.lambda - T(k)));
    out.push_back(esp_direct(others, params.p - 1, &ops));
  }
  return {std::move(out), ops};
}

/// beta by Cramer's rule on V(lambda_0..lambda_{N-1}) beta = d! e_d, both
/// determinants by elimination.
template <FieldType T>
std::vector<T> vandermonde_solve(const ApproxParams<T>& params) {
  const int n = params.n_coeffs;
  std::vector<T> xs(n);
  for (int j = 0; j < n; ++j) xs[j] = T(params.lambda - T(j));
  const Matrix<T> v = vandermonde_matrix(xs);
  const T det_v = determinant(v);
  if (det_v == T(0)) throw std::domain_error("singular Vandermonde system");
  const T rhs = from_rational<T>(factorial(params.d));
  std::vector<T> beta(n);
  for (int j = 0; j < n; ++j) {
    Matrix<T> vj = v;
    for (int k = 0; k < n; ++k) vj(k, j) = (k == params.d) ? rhs : T(0);
    beta[j] = T(determinant(vj) / det_v);
  }
  return beta;
}

/// b_k = (1/k!) sum_j (lambda - j)^k beta_j for k = 0..k_max.
template <FieldType T>
std::vector<T> consistency_moments(const CoefficientVector<T>& cv, int k_max) {
  if (k_max < cv.params.n_coeffs - 1)
    throw std::invalid_argument("consistency_moments: k_max must be at least N-1");
  std::vector<T> b;
  b.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    T acc(0);
    for (std::size_t j = 0; j < cv.beta.size(); ++j) {
      T term = cv.beta[j];
      const T x = T(cv.params.lambda - T(static_cast<long long>(j)));
      for (int e = 0; e < k; ++e) term *= x;
      acc += term;
    }
    b.push_back(T(acc / from_rational<T>(factorial(k))));
  }
  return b;
}

}  // namespace unifd::oracle
