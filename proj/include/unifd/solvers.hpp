#pragma once

// Two-point boundary value problems
//
//   D^alpha u = f on (a, b),  u(a) = ua,  u(b) = ub
//
// discretized on x_i = a + i h, h = (b - a)/N, with
//   - the classical (1, -2, 1) central difference          (alpha = 2)
//   - the unified full-grid scheme: row i uses all N+1 values with the
//     coefficients for (alpha = 2, d = 2, p = N-1, r = i)    (alpha = 2)
//   - the fractional scheme: left-sided weights from the Miller expansion
//     of the (d, p) generator at integer shift r, truncated at x = a
//     (u is taken as zero to the left of a).

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unifd/explicit_form.hpp"
#include "unifd/matrix.hpp"
#include "unifd/scalar.hpp"
#include "unifd/series.hpp"

namespace unifd {

template <FieldType T>
struct BvpProblem {
  T a, b;
  T ua, ub;
  std::function<T(const T&)> rhs;
  T alpha;
  std::function<T(const T&)> exact;  // optional
};

template <FieldType T>
struct LinearSystem {
  Matrix<T> matrix;
  std::vector<T> rhs;
  std::vector<std::string> warnings;
};

template <FieldType T>
struct SolveReport {
  int n_intervals = 0;
  T h;
  std::vector<T> solution;  // N+1 values including the boundary
  std::optional<T> max_error;
  std::optional<double> empirical_order;
  int accuracy_order = 0;  // configured p of the scheme
  std::vector<std::string> warnings;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <FieldType T>
void check_grid(const BvpProblem<T>& problem, int n) {
  if (n < 2) throw std::invalid_argument("need at least N = 2 intervals");
  if (!(problem.a < problem.b)) throw std::invalid_argument("domain must satisfy a < b");
}

template <FieldType T>
void check_classical(const BvpProblem<T>& problem) {
  if (problem.alpha != T(2)) throw std::invalid_argument("classical schemes require alpha = 2");
}

template <FieldType T>
T step(const BvpProblem<T>& problem, int n) {
  return T((problem.b - problem.a) / T(n));
}

template <FieldType T>
T node(const BvpProblem<T>& problem, int n, int i) {
  return T(problem.a + T(i) * step(problem, n));
}

template <FieldType T>
T pivot_tolerance() {
  if constexpr (std::is_same_v<T, double>) {
    return 1e-14;
  } else if constexpr (std::is_same_v<T, BigFloat>) {
    const auto digits = static_cast<long>(BigFloat::default_precision());
    return T(pow(BigFloat(10), BigFloat(-(digits - 2))));
  } else {
    return T(0);
  }
}

}  // namespace detail

/// Tridiagonal (1, -2, 1)/h^2 system over the interior points.
template <FieldType T>
LinearSystem<T> assemble_central(const BvpProblem<T>& problem, int n) {
  detail::check_grid(problem, n);
  detail::check_classical(problem);
  const T h = detail::step(problem, n);
  const T inv_h2 = T(T(1) / (h * h));
  LinearSystem<T> sys{Matrix<T>(n - 1, n - 1), std::vector<T>(n - 1), {}};
  for (int i = 1; i < n; ++i) {
    const int row = i - 1;
    sys.rhs[row] = problem.rhs(detail::node(problem, n, i));
    sys.matrix(row, row) = T(T(-2) * inv_h2);
    if (i > 1) sys.matrix(row, row - 1) = inv_h2;
    else sys.rhs[row] -= inv_h2 * problem.ua;
    if (i < n - 1) sys.matrix(row, row + 1) = inv_h2;
    else sys.rhs[row] -= inv_h2 * problem.ub;
  }
  return sys;
}

/// Row i of the unified scheme, B_{i,j} = beta_j(i), j = 0..N, unscaled by h.
/// Coefficients are generated exactly and then converted to T.
template <FieldType T>
std::vector<T> unified_row(int n, int i) {
  const auto cv = beta_coefficients(derive_params(Rational(2), 2, n - 1, Rational(i)));
  std::vector<T> row;
  row.reserve(cv.beta.size());
  for (const auto& b : cv.beta) row.push_back(from_rational<T>(b));
  return row;
}

/// Full-grid system B^ u^ = F - B_0 u_0 - B_N u_N.
template <FieldType T>
LinearSystem<T> assemble_unified(const BvpProblem<T>& problem, int n) {
  detail::check_grid(problem, n);
  detail::check_classical(problem);
  const T h = detail::step(problem, n);
  const T inv_h2 = T(T(1) / (h * h));
  LinearSystem<T> sys{Matrix<T>(n - 1, n - 1), std::vector<T>(n - 1), {}};
  for (int i = 1; i < n; ++i) {
    const int row = i - 1;
    const auto coeffs = unified_row<T>(n, i);
    sys.rhs[row] = problem.rhs(detail::node(problem, n, i));
    sys.rhs[row] -= coeffs[0] * inv_h2 * problem.ua;
    sys.rhs[row] -= coeffs[n] * inv_h2 * problem.ub;
    for (int j = 1; j < n; ++j) sys.matrix(row, j - 1) = T(coeffs[j] * inv_h2);
  }
  return sys;
}

/// Left-sided fractional scheme: row i applies w_k to u_{i+r-k} for every
/// k whose grid index lies in [0, N].
template <FieldType T>
LinearSystem<T> assemble_fractional(const BvpProblem<T>& problem, int n, int p, int d, const T& r) {
  detail::check_grid(problem, n);
  if (!(problem.alpha > T(1) && problem.alpha < T(2)))
    throw std::invalid_argument("fractional scheme requires 1 < alpha < 2");
  if (!is_integer(r) || r < T(0))
    throw std::invalid_argument("fractional scheme requires a non-negative integer shift r");
  const int shift = static_cast<int>(to_double(r));

  LinearSystem<T> sys{Matrix<T>(n - 1, n - 1), std::vector<T>(n - 1), {}};
  if (!(p == 2 && d == 2 && shift == 1))
    sys.warnings.push_back("experimental configuration (p, d, r) = (" + std::to_string(p) + ", " +
                           std::to_string(d) + ", " + std::to_string(shift) + ")");

  const auto cv = beta_coefficients(derive_params(problem.alpha, d, p, r));
  if (cv.beta.front() != T(0)) {
    const auto diag = convergence_diagnostic(cv);
    if (!diag.converges_on_unit_disk)
      sys.warnings.push_back("generator series does not converge on the unit disk (|beta_N-1/beta_0| = " +
                             format_value(diag.edge_ratio) + ")");
  }
  const auto series = miller_expand(generator_polynomial(cv), cv.params.gamma(), n + shift + 1);

  const T h = detail::step(problem, n);
  const T scale = T(T(1) / real_power(h, problem.alpha));
  for (int i = 1; i < n; ++i) {
    const int row = i - 1;
    sys.rhs[row] = problem.rhs(detail::node(problem, n, i));
    for (int k = std::max(0, i + shift - n); k <= i + shift; ++k) {
      const int j = i + shift - k;
      const T w = T(series.weights[k] * scale);
      if (j == 0) sys.rhs[row] -= w * problem.ua;
      else if (j == n) sys.rhs[row] -= w * problem.ub;
      else sys.matrix(row, j - 1) += w;
    }
  }
  return sys;
}

/// Gaussian elimination; partial pivoting in float fields, first nonzero
/// pivot (exact) for Rational.
template <FieldType T>
std::vector<T> solve_dense(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_dense: dimension mismatch");
  T scale(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, abs_value(a(i, j)));
  const T tol = T(detail::pivot_tolerance<T>() * scale);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    if constexpr (is_exact_v<T>) {
      while (piv < n && a(piv, k) == T(0)) ++piv;
      if (piv == n) throw SingularMatrix("singular matrix (zero pivot)");
    } else {
      T best = abs_value(a(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        T v = abs_value(a(i, k));
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (!(best > tol)) throw SingularMatrix("singular matrix (pivot below tolerance)");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    const T* pivot_row = a.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == T(0)) continue;
      const T factor = T(a(i, k) / pivot_row[k]);
      T* ri = a.row(i);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= factor * pivot_row[j];
      ri[k] = T(0);
      b[i] -= factor * b[k];
    }
  }
  std::vector<T> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    T acc = b[ii];
    const T* ri = a.row(ii);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= ri[j] * x[j];
    x[ii] = T(acc / ri[ii]);
  }
  return x;
}

enum class SchemeKind { central, unified, fractional };

template <FieldType T>
struct Scheme {
  SchemeKind kind = SchemeKind::central;
  int p = 2;  // fractional only
  int d = 2;  // fractional only
  T r = T(1);  // fractional only
};

template <FieldType T>
SolveReport<T> solve_bvp(const BvpProblem<T>& problem, const Scheme<T>& scheme, int n) {
  LinearSystem<T> sys;
  SolveReport<T> rep;
  switch (scheme.kind) {
    case SchemeKind::central:
      sys = assemble_central(problem, n);
      rep.accuracy_order = 2;
      break;
    case SchemeKind::unified:
      sys = assemble_unified(problem, n);
      rep.accuracy_order = n - 1;
      break;
    case SchemeKind::fractional:
      sys = assemble_fractional(problem, n, scheme.p, scheme.d, scheme.r);
      rep.accuracy_order = scheme.p;
      break;
  }
  const auto interior = solve_dense(std::move(sys.matrix), std::move(sys.rhs));
  rep.n_intervals = n;
  rep.h = detail::step(problem, n);
  rep.warnings = std::move(sys.warnings);
  rep.solution.reserve(n + 1);
  rep.solution.push_back(problem.ua);
  rep.solution.insert(rep.solution.end(), interior.begin(), interior.end());
  rep.solution.push_back(problem.ub);
  if (problem.exact) {
    T err(0);
    for (int i = 0; i <= n; ++i)
      err = std::max(err, abs_value(T(rep.solution[i] - problem.exact(detail::node(problem, n, i)))));
    rep.max_error = err;
  }
  return rep;
}

/// Solves for each N in turn; the order between consecutive runs is
/// log(err_prev / err) / log(N / N_prev) (log2 of the ratio for doublings).
template <FieldType T>
std::vector<SolveReport<T>> convergence_study(const BvpProblem<T>& problem, const Scheme<T>& scheme,
                                              const std::vector<int>& grid_sizes) {
  if (!problem.exact) throw std::invalid_argument("convergence_study needs the exact solution");
  std::vector<SolveReport<T>> out;
  out.reserve(grid_sizes.size());
  for (int n : grid_sizes) {
    auto rep = solve_bvp(problem, scheme, n);
    if (!out.empty()) {
      const auto& prev = out.back();
      const double e0 = to_double(*prev.max_error);
      const double e1 = to_double(*rep.max_error);
      if (e0 > 0.0 && e1 > 0.0)
        rep.empirical_order = std::log(e0 / e1) / std::log(double(n) / double(prev.n_intervals));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

/// u'' = -sin x on [-1, 1], u = sin x.
template <FieldType T>
BvpProblem<T> sine_problem() {
  static_assert(!is_exact_v<T>, "sin is not available in the rational field");
  using std::sin;
  return BvpProblem<T>{
      T(-1), T(1), T(sin(T(-1))), T(sin(T(1))), [](const T& x) { return T(-sin(x)); }, T(2),
      [](const T& x) { return T(sin(x)); }};
}

/// D^alpha u = Gamma(4+alpha)/6 x^3 on [0, 1], u(0) = 0, u(1) = 1,
/// u = x^{3+alpha} (left Riemann-Liouville derivative from 0).
template <FieldType T>
BvpProblem<T> power_law_problem(const T& alpha) {
  static_assert(!is_exact_v<T>, "Gamma is not available in the rational field");
  using std::pow;
  using std::tgamma;
  const T coef = T(tgamma(T(T(4) + alpha)) / T(6));
  return BvpProblem<T>{T(0), T(1), T(0), T(1), [coef](const T& x) { return T(coef * x * x * x); }, alpha,
                       [alpha](const T& x) { return T(pow(x, T(T(3) + alpha))); }};
}

}  // namespace unifd
