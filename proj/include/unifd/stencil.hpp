#pragma once

// Classical finite-difference formulas assembled from the unified
// coefficients.  Weight k multiplies f(x + (r - k) h); the sum is divided by
// h^alpha.  Compact formulas use alpha = d and N = p + d points; non-compact
// ones raise a lower-order base polynomial to the integer power alpha / d.

#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unifd/explicit_form.hpp"
#include "unifd/scalar.hpp"
#include "unifd/series.hpp"

namespace unifd {

enum class StencilKind { left, right, central, shifted, staggered };

StencilKind parse_stencil_kind(std::string_view name);
std::string_view stencil_kind_name(StencilKind kind);

template <FieldType T>
struct ShiftChoice {
  T shift;
  std::string warning;  // empty unless the shift lies outside the stencil
};

/// Shift r for the named compact form:
///   left 0, right p+d-1, central (p+d-1)/2, shifted: integer r,
///   staggered: non-integer r.
/// A central shift that is a half-integer gives the staggered-central form.
template <FieldType T>
ShiftChoice<T> shift_for_kind(StencilKind kind, int d, int p, std::optional<T> r = std::nullopt) {
  if (d < 1 || p < 1) throw std::invalid_argument("shift_for_kind: need d >= 1 and p >= 1");
  const int last = p + d - 1;
  switch (kind) {
    case StencilKind::left:
      return {T(0), {}};
    case StencilKind::right:
      return {T(last), {}};
    case StencilKind::central:
      return {from_rational<T>(Rational(last, 2)), {}};
    case StencilKind::shifted: {
      if (!r) throw std::invalid_argument("shifted stencil requires a shift r");
      if (!is_integer(*r)) throw std::invalid_argument("shifted stencil requires an integer shift");
      std::string warning;
      if (*r < T(0) || *r > T(last))
        warning = "shift " + format_value(*r) + " lies outside [0, " + std::to_string(last) +
                  "]; the formula extrapolates";
      return {*r, warning};
    }
    case StencilKind::staggered: {
      if (!r) throw std::invalid_argument("staggered stencil requires a shift r");
      if (is_integer(*r)) throw std::invalid_argument("staggered stencil requires a non-integer shift");
      std::string warning;
      if (*r < T(0) || *r > T(last))
        warning = "shift " + format_value(*r) + " lies outside [0, " + std::to_string(last) +
                  "]; the formula extrapolates";
      return {*r, warning};
    }
  }
  throw std::invalid_argument("unknown stencil kind");
}

template <FieldType T>
struct Stencil {
  int derivative_order = 0;  // alpha
  int base_order = 0;        // d
  int accuracy_order = 0;    // p
  T shift;                   // r
  T lambda;
  std::vector<T> offsets;  // r - k
  std::vector<T> weights;
  T eval_fraction;  // r - floor(r)
  T leading_error;  // a_p
  int error_derivative_order = 0;
};

namespace detail {

template <FieldType T>
Stencil<T> make_stencil(const CoefficientVector<T>& cv, int alpha, std::vector<T> weights) {
  const auto& pr = cv.params;
  Stencil<T> st;
  st.derivative_order = alpha;
  st.base_order = pr.d;
  st.accuracy_order = pr.p;
  st.shift = pr.r;
  st.lambda = pr.lambda;
  st.weights = std::move(weights);
  st.offsets.reserve(st.weights.size());
  for (std::size_t k = 0; k < st.weights.size(); ++k)
    st.offsets.push_back(T(pr.r - T(static_cast<long long>(k))));
  st.eval_fraction = T(pr.r - floor_value(pr.r));
  st.leading_error = error_coefficients(cv, 1).leading();
  st.error_derivative_order = alpha + pr.p;
  return st;
}

}  // namespace detail

template <FieldType T>
Stencil<T> compact_stencil(int d, int p, const T& r) {
  const auto cv = beta_coefficients(derive_params(T(d), d, p, r));
  return detail::make_stencil(cv, d, cv.beta);
}

template <FieldType T>
Stencil<T> noncompact_stencil(int alpha, int d, int p, const T& r) {
  if (d < 1 || alpha < 1 || alpha % d != 0)
    throw std::invalid_argument("non-compact stencil requires alpha to be an integer multiple of d");
  const int power = alpha / d;
  if (power < 2)
    throw std::invalid_argument("non-compact stencil requires alpha/d >= 2 (alpha = d is the compact form)");
  const auto cv = beta_coefficients(derive_params(T(alpha), d, p, r));
  auto weights = poly_power_int(generator_polynomial(cv), power).coefficients();
  return detail::make_stencil(cv, alpha, std::move(weights));
}

/// (1/h^alpha) sum_k w_k f(x + offset_k h)
template <FieldType T>
T apply_stencil(const Stencil<T>& st, const std::function<T(const T&)>& f, const T& x, const T& h) {
  if (!(h > T(0))) throw std::invalid_argument("apply_stencil: step h must be positive");
  T acc(0);
  for (std::size_t k = 0; k < st.weights.size(); ++k) acc += st.weights[k] * f(T(x + st.offsets[k] * h));
  return T(acc / int_power(h, st.derivative_order));
}

/// Same, from samples already taken at x + offset_k h (sample k for weight k).
template <FieldType T>
T apply_stencil(const Stencil<T>& st, std::span<const T> samples, const T& h) {
  if (!(h > T(0))) throw std::invalid_argument("apply_stencil: step h must be positive");
  if (samples.size() != st.weights.size())
    throw std::invalid_argument("apply_stencil: expected " + std::to_string(st.weights.size()) +
                                " samples, got " + std::to_string(samples.size()));
  T acc(0);
  for (std::size_t k = 0; k < st.weights.size(); ++k) acc += st.weights[k] * samples[k];
  return T(acc / int_power(h, st.derivative_order));
}

enum class RenderFormat { human, json, csv };

RenderFormat parse_render_format(std::string_view name);

template <FieldType T>
nlohmann::json stencil_json(const Stencil<T>& st) {
  nlohmann::json j;
  j["alpha"] = st.derivative_order;
  j["d"] = st.base_order;
  j["p"] = st.accuracy_order;
  j["r"] = format_value(st.shift);
  j["lambda"] = format_value(st.lambda);
  auto& offs = j["offsets"] = nlohmann::json::array();
  for (const auto& o : st.offsets) offs.push_back(format_value(o));
  auto& ws = j["weights"] = nlohmann::json::array();
  for (const auto& w : st.weights) ws.push_back(format_value(w));
  j["eval_fraction"] = format_value(st.eval_fraction);
  j["leading_error"] = format_value(st.leading_error);
  j["error_derivative_order"] = st.error_derivative_order;
  return j;
}

/// human: "w0, (w1), w2 | error a_p" with the evaluation-point weight in
/// parentheses; json: one object; csv: header plus one row per weight.
template <FieldType T>
std::string render_stencil(const Stencil<T>& st, RenderFormat format) {
  std::ostringstream os;
  switch (format) {
    case RenderFormat::human: {
      const T fl = floor_value(st.shift);
      const long long marked = to_double(fl) >= 0.0 ? static_cast<long long>(to_double(fl)) : -1;
      for (std::size_t k = 0; k < st.weights.size(); ++k) {
        if (k) os << ", ";
        const std::string w = format_value(st.weights[k]);
        if (static_cast<long long>(k) == marked) os << '(' << w << ')';
        else os << w;
      }
      os << " | error " << format_value(st.leading_error);
      if (st.eval_fraction != T(0)) os << " | c " << format_value(st.eval_fraction);
      break;
    }
    case RenderFormat::json:
      os << stencil_json(st).dump();
      break;
    case RenderFormat::csv:
      os << "k,offset,weight\n";
      for (std::size_t k = 0; k < st.weights.size(); ++k)
        os << k << ',' << format_value(st.offsets[k]) << ',' << format_value(st.weights[k]) << '\n';
      break;
  }
  return os.str();
}

}  // namespace unifd
