#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "unifd/explicit_form.hpp"
#include "unifd/oracle.hpp"
#include "unifd/scalar.hpp"
#include "unifd/series.hpp"
#include "unifd/solvers.hpp"
#include "unifd/stencil.hpp"

namespace unifd::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string alpha;
  std::string r;  // empty: 0 where a default makes sense
  int d = 1;
  int p = 1;
  std::string mode;
  unsigned digits = kDefaultDigits;
  std::string format;
  int terms = 1;
  int K = 10;
  int N = 0;
  int Nmax = 0;
  std::string kind;
  std::string method = "miller";
  std::string scheme = "unified";
  int which = 0;
  bool sweep = false;
  bool ops = false;
};

template <class Fn>
int with_field(Field field, unsigned digits, Fn&& fn) {
  switch (field) {
    case Field::rational:
      return fn(Rational{});
    case Field::f64:
      return fn(double{});
    case Field::big: {
      PrecisionScope scope(digits);
      return fn(BigFloat{});
    }
  }
  throw std::invalid_argument("unknown arithmetic mode");
}

template <FieldType T>
T value_of(const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
  Field field = Field::rational;
  if constexpr (std::is_same_v<T, double>) field = Field::f64;
  if constexpr (std::is_same_v<T, BigFloat>) field = Field::big;
  try {
    return get_as<T>(parse_scalar(text, field));
  } catch (const ScalarError& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

template <FieldType T>
json json_list(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(format_value(x));
  return out;
}

template <FieldType T>
std::string joined(const std::vector<T>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_value(xs[i]);
  }
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

RenderFormat format_or(const std::string& text, RenderFormat fallback) {
  return text.empty() ? fallback : parse_render_format(text);
}

std::string shift_or_zero(const Options& o) { return o.r.empty() ? "0" : o.r; }

Field mode_or(const std::string& text, Field fallback) {
  return text.empty() ? fallback : parse_field(text);
}

// ---- weights --------------------------------------------------------------

int cmd_weights(const Options& o, std::ostream& out) {
  const auto fmt = format_or(o.format, RenderFormat::human);
  return with_field(mode_or(o.mode, Field::rational), o.digits, [&]<class T>(T) {
    const auto params = derive_params(value_of<T>(o.alpha, "--alpha"), o.d, o.p, value_of<T>(shift_or_zero(o), "--r"));
    const auto cv = beta_coefficients(params);
    const auto err = error_coefficients(cv, o.terms);
    switch (fmt) {
      case RenderFormat::human:
        out << joined(cv.beta) << '\n';
        out << "error: " << format_value(err.leading()) << '\n';
        for (const auto& [m, a] : err.a)
          if (m != o.p) out << "a_" << m << ": " << format_value(a) << '\n';
        break;
      case RenderFormat::json: {
        json j;
        j["alpha"] = format_value(params.alpha);
        j["d"] = params.d;
        j["p"] = params.p;
        j["r"] = format_value(params.r);
        j["lambda"] = format_value(params.lambda);
        j["beta"] = json_list(cv.beta);
        j["numerators"] = json_list(cv.numerators);
        j["denominators"] = json_list(cv.denominators);
        auto& errors = j["errors"] = json::object();
        for (const auto& [m, a] : err.a) errors[std::to_string(m)] = format_value(a);
        out << j.dump() << '\n';
        break;
      }
      case RenderFormat::csv:
        out << "j,numerator,denominator,beta\n";
        for (std::size_t i = 0; i < cv.beta.size(); ++i)
          out << i << ',' << format_value(cv.numerators[i]) << ',' << format_value(cv.denominators[i]) << ','
              << format_value(cv.beta[i]) << '\n';
        break;
    }
    return kOk;
  });
}

// ---- stencil --------------------------------------------------------------

int cmd_stencil(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_or(o.format, RenderFormat::human);
  const auto kind = parse_stencil_kind(o.kind);
  return with_field(mode_or(o.mode, Field::rational), o.digits, [&]<class T>(T) {
    std::optional<T> r;
    if (kind == StencilKind::shifted || kind == StencilKind::staggered) r = value_of<T>(o.r, "--r");
    const auto choice = shift_for_kind<T>(kind, o.d, o.p, r);
    if (!choice.warning.empty()) err << "warning: " << choice.warning << '\n';
    int alpha = o.d;
    if (!o.alpha.empty()) {
      const Rational a = value_of<Rational>(o.alpha, "--alpha");
      if (!is_integer(a)) throw std::invalid_argument("--alpha must be an integer for classical stencils");
      alpha = boost::multiprecision::numerator(a).convert_to<int>();
    }
    const auto st = alpha == o.d ? compact_stencil(o.d, o.p, choice.shift)
                                 : noncompact_stencil(alpha, o.d, o.p, choice.shift);
    out << render_stencil(st, fmt);
    if (fmt != RenderFormat::csv) out << '\n';
    return kOk;
  });
}

// ---- expand ---------------------------------------------------------------

int cmd_expand(const Options& o, std::ostream& out) {
  const auto fmt = format_or(o.format, RenderFormat::human);
  if (o.method != "miller" && o.method != "grunwald")
    throw std::invalid_argument("--method must be miller or grunwald");
  return with_field(mode_or(o.mode, Field::f64), o.digits, [&]<class T>(T) {
    const T alpha = value_of<T>(o.alpha, "--alpha");
    std::vector<T> weights;
    T gamma = alpha;
    std::optional<ConvergenceReport<T>> diag;
    if (o.method == "grunwald") {
      weights = grunwald_weights(alpha, o.K);
    } else {
      const auto cv = beta_coefficients(derive_params(alpha, o.d, o.p, value_of<T>(shift_or_zero(o), "--r")));
      gamma = cv.params.gamma();
      if (cv.beta.front() != T(0)) diag = convergence_diagnostic(cv);
      weights = miller_expand(generator_polynomial(cv), gamma, o.K).weights;
    }
    switch (fmt) {
      case RenderFormat::human:
        out << "gamma: " << format_value(gamma) << '\n';
        out << "weights: " << joined(weights) << '\n';
        if (diag)
          out << "edge ratio: " << format_value(diag->edge_ratio) << ", "
              << (diag->converges_on_unit_disk ? "converges" : "does not converge") << " on the unit disk"
              << (diag->advisory ? " (advisory)" : "") << '\n';
        break;
      case RenderFormat::json: {
        json j;
        j["method"] = o.method;
        j["gamma"] = format_value(gamma);
        j["weights"] = json_list(weights);
        if (diag)
          j["diagnostic"] = {{"beta0_positive", diag->beta0_positive},
                             {"edge_ratio", format_value(diag->edge_ratio)},
                             {"converges_on_unit_disk", diag->converges_on_unit_disk},
                             {"advisory", diag->advisory}};
        out << j.dump() << '\n';
        break;
      }
      case RenderFormat::csv:
        out << "k,weight\n";
        for (std::size_t k = 0; k < weights.size(); ++k) out << k << ',' << format_value(weights[k]) << '\n';
        break;
    }
    return kOk;
  });
}

// ---- table ----------------------------------------------------------------

/// Monomial coefficients of the polynomial through (k, ys[k]), k = 0..n-1.
std::vector<Rational> interpolate_at_integers(const std::vector<Rational>& ys) {
  const std::size_t n = ys.size();
  std::vector<Rational> c = ys;  // Newton divided differences
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) c[i] = (c[i] - c[i - 1]) / Rational(static_cast<long>(k));
  std::vector<Rational> poly{c[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= Rational(static_cast<long>(i)) * poly[k];
    }
    next[0] += c[i];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

std::string format_lambda_poly(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    if (k == 0) {
      body = format_rational(mag);
    } else {
      if (mag != 1) body = format_rational(mag) + " ";
      body += k == 1 ? "lambda" : "lambda^" + std::to_string(k);
    }
    if (out.empty()) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::vector<Rational> beta_at(int d, int p, const Rational& lambda) {
  return beta_coefficients(derive_params(Rational(d), d, p, lambda)).beta;
}

int table_generators(RenderFormat fmt, std::ostream& out) {
  json rows = json::array();
  if (fmt == RenderFormat::csv) out << "p,k,coefficient\n";
  for (int p = 1; p <= 6; ++p) {
    const auto beta = beta_at(1, p, Rational(0));
    switch (fmt) {
      case RenderFormat::human:
        out << "p=" << p << ": " << joined(beta) << '\n';
        break;
      case RenderFormat::csv:
        for (std::size_t k = 0; k < beta.size(); ++k) out << p << ',' << k << ',' << format_rational(beta[k]) << '\n';
        break;
      case RenderFormat::json:
        rows.push_back({{"p", p}, {"coefficients", json_list(beta)}});
        break;
    }
  }
  if (fmt == RenderFormat::json) out << rows.dump() << '\n';
  return kOk;
}

int table_lambda_polynomials(int d, RenderFormat fmt, std::ostream& out) {
  static const std::vector<std::string> samples = {"0", "1/2", "1", "3/2", "2"};
  json rows = json::array();
  if (fmt == RenderFormat::csv) out << "d,p,lambda,j,beta\n";
  for (int p = 1; p <= 5; ++p) {
    const int n = p + d;
    // beta_j is a polynomial of degree p-1 in lambda
    std::vector<std::vector<Rational>> at_nodes(n);
    for (int node = 0; node < p; ++node) {
      const auto beta = beta_at(d, p, Rational(node));
      for (int j = 0; j < n; ++j) at_nodes[j].push_back(beta[j]);
    }
    std::vector<std::vector<Rational>> polys;
    for (const auto& ys : at_nodes) polys.push_back(interpolate_at_integers(ys));

    json jrow{{"d", d}, {"p", p}};
    if (fmt == RenderFormat::human) {
      out << "d=" << d << " p=" << p << '\n';
      for (int j = 0; j < n; ++j) out << "  beta_" << j << " = " << format_lambda_poly(polys[j]) << '\n';
    } else if (fmt == RenderFormat::json) {
      auto& jp = jrow["polynomials"] = json::array();
      for (const auto& poly : polys) jp.push_back(json_list(poly));
    }
    for (const auto& s : samples) {
      const Rational lambda = parse_rational(s);
      const auto beta = beta_at(d, p, lambda);
      switch (fmt) {
        case RenderFormat::human:
          out << "  lambda=" << s << ": " << joined(beta) << '\n';
          break;
        case RenderFormat::csv:
          for (int j = 0; j < n; ++j) out << d << ',' << p << ',' << s << ',' << j << ',' << format_rational(beta[j]) << '\n';
          break;
        case RenderFormat::json:
          jrow["samples"][s] = json_list(beta);
          break;
      }
    }
    if (fmt == RenderFormat::json) rows.push_back(std::move(jrow));
  }
  if (fmt == RenderFormat::json) out << rows.dump() << '\n';
  return kOk;
}

int table_compact(RenderFormat fmt, std::ostream& out) {
  struct Row {
    StencilKind kind;
    int d, p;
    std::optional<Rational> r;
  };
  const std::vector<Row> rows = {{StencilKind::left, 1, 3, std::nullopt},
                                 {StencilKind::central, 3, 4, std::nullopt},
                                 {StencilKind::shifted, 2, 4, Rational(1)},
                                 {StencilKind::right, 3, 4, std::nullopt},
                                 {StencilKind::staggered, 2, 4, Rational(3, 2)}};
  json all = json::array();
  if (fmt == RenderFormat::csv) out << "kind,d,p,r,weights,error\n";
  for (const auto& row : rows) {
    const auto shift = shift_for_kind<Rational>(row.kind, row.d, row.p, row.r).shift;
    const auto st = compact_stencil(row.d, row.p, shift);
    const std::string name(stencil_kind_name(row.kind));
    switch (fmt) {
      case RenderFormat::human:
        out << name << " d=" << row.d << " p=" << row.p << " r=" << format_rational(shift) << ": "
            << render_stencil(st, RenderFormat::human) << '\n';
        break;
      case RenderFormat::csv:
        out << name << ',' << row.d << ',' << row.p << ',' << format_rational(shift) << ',' << joined(st.weights)
            << ',' << format_rational(st.leading_error) << '\n';
        break;
      case RenderFormat::json: {
        auto j = stencil_json(st);
        j["kind"] = name;
        all.push_back(std::move(j));
        break;
      }
    }
  }
  if (fmt == RenderFormat::json) out << all.dump() << '\n';
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (!o.mode.empty() && parse_field(o.mode) != Field::rational)
    throw std::invalid_argument("table output is exact; only --mode rational is supported");
  const auto fmt = format_or(o.format, RenderFormat::human);
  switch (o.which) {
    case 1: return table_generators(fmt, out);
    case 2: return table_lambda_polynomials(1, fmt, out);
    case 3: return table_lambda_polynomials(2, fmt, out);
    case 4: return table_lambda_polynomials(3, fmt, out);
    case 5: return table_compact(fmt, out);
    default: throw std::invalid_argument("--which must be between 1 and 5");
  }
}

// ---- bvp / fbvp -----------------------------------------------------------

std::vector<int> doubling_grid(int n, int n_max) {
  if (n < 2) throw std::invalid_argument("--N must be at least 2");
  if (n_max < n) throw std::invalid_argument("--Nmax must be at least --N");
  std::vector<int> grid;
  for (long long m = n; m <= n_max; m *= 2) grid.push_back(static_cast<int>(m));
  return grid;
}

template <FieldType T>
void emit_study(const std::vector<SolveReport<T>>& reports, const std::string& label, RenderFormat fmt,
                std::ostream& out, std::ostream& err) {
  std::set<std::string> warnings;
  for (const auto& r : reports) warnings.insert(r.warnings.begin(), r.warnings.end());
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  switch (fmt) {
    case RenderFormat::csv:
      out << "N,h,max_error,order\n";
      for (const auto& r : reports)
        out << r.n_intervals << ',' << format_value(r.h) << ',' << sci(to_double(*r.max_error)) << ','
            << (r.empirical_order ? fixed4(*r.empirical_order) : "") << '\n';
      break;
    case RenderFormat::human:
      out << label << '\n';
      out << std::setw(6) << "N" << std::setw(14) << "max_error" << std::setw(10) << "order" << std::setw(8) << "p"
          << '\n';
      for (const auto& r : reports)
        out << std::setw(6) << r.n_intervals << std::setw(14) << sci(to_double(*r.max_error)) << std::setw(10)
            << (r.empirical_order ? fixed4(*r.empirical_order) : "-") << std::setw(8) << r.accuracy_order << '\n';
      break;
    case RenderFormat::json: {
      json rows = json::array();
      for (const auto& r : reports)
        rows.push_back({{"N", r.n_intervals},
                        {"h", format_value(r.h)},
                        {"max_error", sci(to_double(*r.max_error))},
                        {"order", r.empirical_order ? json(*r.empirical_order) : json(nullptr)},
                        {"accuracy_order", r.accuracy_order}});
      out << json{{"study", label}, {"rows", rows}}.dump() << '\n';
      break;
    }
  }
}

int cmd_bvp(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_or(o.format, RenderFormat::csv);
  const auto field = mode_or(o.mode, Field::f64);
  if (field == Field::rational) throw std::invalid_argument("bvp needs --mode f64 or big (sin is not rational)");
  SchemeKind kind;
  if (o.scheme == "central") kind = SchemeKind::central;
  else if (o.scheme == "unified") kind = SchemeKind::unified;
  else throw std::invalid_argument("--scheme must be central or unified");
  const auto grid = doubling_grid(o.N ? o.N : 4, o.Nmax ? o.Nmax : std::max(o.N, 16));
  return with_field(field, o.digits, [&]<class T>(T) {
    if constexpr (is_exact_v<T>) {
      return kUsageError;
    } else {
      const auto reports = convergence_study(sine_problem<T>(), Scheme<T>{kind}, grid);
      emit_study(reports, "u'' = -sin x on [-1, 1], " + o.scheme + " scheme", fmt, out, err);
      return kOk;
    }
  });
}

int cmd_fbvp(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_or(o.format, RenderFormat::csv);
  const auto field = mode_or(o.mode, Field::f64);
  if (field == Field::rational) throw std::invalid_argument("fbvp needs --mode f64 or big (Gamma is not rational)");
  const int n = o.N ? o.N : 64;
  const auto grid = doubling_grid(n, o.Nmax ? o.Nmax : n);
  return with_field(field, o.digits, [&]<class T>(T) {
    if constexpr (is_exact_v<T>) {
      return kUsageError;
    } else {
      const T alpha = value_of<T>(o.alpha, "--alpha");
      const Scheme<T> scheme{SchemeKind::fractional, o.p, o.d, value_of<T>(o.r, "--r")};
      const auto reports = convergence_study(power_law_problem(alpha), scheme, grid);
      emit_study(reports, "D^alpha u = Gamma(4+alpha)/6 x^3 on [0, 1], alpha = " + o.alpha, fmt, out, err);
      return kOk;
    }
  });
}

// ---- oracle ---------------------------------------------------------------

int cmd_oracle(const Options& o, std::ostream& out) {
  if (!o.mode.empty() && parse_field(o.mode) != Field::rational)
    throw std::invalid_argument("the oracle compares exactly; only --mode rational is supported");
  if (o.sweep) {
    static const std::vector<std::string> lambdas = {"0", "1/3", "1/2", "1", "3/2", "2", "5/2"};
    int checked = 0, mismatches = 0;
    for (int d = 1; d <= 4; ++d)
      for (int p = 1; p <= 6; ++p)
        for (const auto& s : lambdas) {
          const auto params = derive_params(Rational(d), d, p, parse_rational(s));
          ++checked;
          if (beta_coefficients(params).beta != oracle::vandermonde_solve(params)) {
            ++mismatches;
            out << "MISMATCH d=" << d << " p=" << p << " lambda=" << s << '\n';
          }
        }
    out << "checked " << checked << " parameter sets, " << mismatches << " mismatches\n";
    return mismatches ? kComputationError : kOk;
  }
  const auto params =
      derive_params(value_of<Rational>(o.alpha.empty() ? std::to_string(o.d) : o.alpha, "--alpha"), o.d, o.p,
                    value_of<Rational>(shift_or_zero(o), "--r"));
  const auto explicit_beta = beta_coefficients(params).beta;
  const auto cramer_beta = oracle::vandermonde_solve(params);
  out << "explicit: " << joined(explicit_beta) << '\n';
  out << "cramer:   " << joined(cramer_beta) << '\n';
  const bool match = explicit_beta == cramer_beta;
  out << (match ? "match" : "MISMATCH") << '\n';
  if (o.ops) {
    OpCount fast;
    numerators(params, &fast);
    const auto direct = oracle::numerators_direct(params).second;
    out << "numerator ops (recurrence): " << fast.additions << " additions, " << fast.multiplications
        << " multiplications\n";
    out << "numerator ops (direct):     " << direct.additions << " additions, " << direct.multiplications
        << " multiplications\n";
  }
  return match ? kOk : kComputationError;
}

// ---- wiring ---------------------------------------------------------------

void add_params(CLI::App* cmd, Options& o, bool need_alpha) {
  auto* a = cmd->add_option("--alpha", o.alpha, "derivative order (e.g. 1.6 or 8/5)");
  if (need_alpha) a->required();
  cmd->add_option("--d", o.d, "base differential order")->capture_default_str();
  cmd->add_option("--p", o.p, "approximation order")->capture_default_str();
  cmd->add_option("--r", o.r, "shift (e.g. 3/2)");
}

void add_mode(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "arithmetic: rational, f64 or big");
  cmd->add_option("--digits", o.digits, "decimal digits for --mode big")->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output: human, json or csv");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-difference and fractional generator coefficients", "unifd"};
  app.require_subcommand(1);
  Options o;

  auto* weights = app.add_subcommand("weights", "coefficients beta_j and leading error");
  add_params(weights, o, true);
  add_mode(weights, o);
  add_format(weights, o);
  weights->add_option("--terms", o.terms, "number of error coefficients (at most p)")->capture_default_str();

  auto* stencil = app.add_subcommand("stencil", "classical difference formula");
  stencil->add_option("--kind", o.kind, "left, right, central, shifted or staggered")->required();
  add_params(stencil, o, false);
  add_mode(stencil, o);
  add_format(stencil, o);

  auto* expand = app.add_subcommand("expand", "power-series weights of a generator");
  add_params(expand, o, true);
  add_mode(expand, o);
  add_format(expand, o);
  expand->add_option("--K", o.K, "number of weights")->capture_default_str();
  expand->add_option("--method", o.method, "miller or grunwald")->capture_default_str();

  auto* table = app.add_subcommand("table", "regenerate a coefficient table");
  table->add_option("--which", o.which,
                    "1 backward-difference generators, 2-4 lambda polynomials for d = 1..3, 5 compact forms")
      ->required();
  add_mode(table, o);
  add_format(table, o);

  auto* bvp = app.add_subcommand("bvp", "u'' = -sin x convergence study");
  bvp->add_option("--scheme", o.scheme, "central or unified")->capture_default_str();
  bvp->add_option("--N", o.N, "first grid size (default 4)");
  bvp->add_option("--Nmax", o.Nmax, "last grid size, doubling from --N (default 16)");
  add_mode(bvp, o);
  add_format(bvp, o);

  Options f;  // fractional study defaults: d = 2, p = 2, r = 1
  f.d = 2;
  f.p = 2;
  f.r = "1";
  auto* fbvp = app.add_subcommand("fbvp", "fractional power-law convergence study");
  fbvp->add_option("--alpha", f.alpha, "derivative order in (1, 2)")->required();
  fbvp->add_option("--d", f.d, "base order")->capture_default_str();
  fbvp->add_option("--p", f.p, "approximation order")->capture_default_str();
  fbvp->add_option("--r", f.r, "integer shift")->capture_default_str();
  fbvp->add_option("--N", f.N, "first grid size (default 64)");
  fbvp->add_option("--Nmax", f.Nmax, "last grid size, doubling from --N (default --N)");
  add_mode(fbvp, f);
  add_format(fbvp, f);

  auto* orc = app.add_subcommand("oracle", "cross-check explicit coefficients against Cramer's rule");
  add_params(orc, o, false);
  add_mode(orc, o);
  orc->add_flag("--sweep", o.sweep, "check d <= 4, p <= 6 over a set of shifts");
  orc->add_flag("--ops", o.ops, "also report numerator operation counts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (app.got_subcommand(weights)) return cmd_weights(o, out);
    if (app.got_subcommand(stencil)) return cmd_stencil(o, out, err);
    if (app.got_subcommand(expand)) return cmd_expand(o, out);
    if (app.got_subcommand(table)) return cmd_table(o, out);
    if (app.got_subcommand(bvp)) return cmd_bvp(o, out, err);
    if (app.got_subcommand(fbvp)) return cmd_fbvp(f, out, err);
    if (app.got_subcommand(orc)) return cmd_oracle(o, out);
  } catch (const NonRationalPower& e) {
    err << "error: " << e.what() << " (rerun with --mode f64 or --mode big)\n";
    return kComputationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kUsageError;
}

}  // namespace unifd::cli
