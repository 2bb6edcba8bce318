#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "formal_series.hpp"
#include "reference_tables.hpp"
#include "unifd/explicit_form.hpp"

using namespace unifd;
using reference::q;

namespace {

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(q(x));
  return out;
}

std::vector<Rational> beta_q(const Rational& alpha, int d, int p, const Rational& r) {
  return beta_coefficients(derive_params(alpha, d, p, r)).beta;
}

}  // namespace

TEST_CASE("derive_params") {
  const auto pr = derive_params(q("8/5"), 2, 2, q("1"));
  CHECK(pr.lambda == q("5/4"));
  CHECK(pr.n_coeffs == 4);
  CHECK(pr.gamma() == q("4/5"));
  CHECK_THROWS_AS(derive_params(q("0"), 1, 1, q("0")), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(q("-1"), 1, 1, q("0")), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(q("1"), 0, 1, q("0")), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(q("1"), 1, 0, q("0")), std::invalid_argument);
}

TEST_CASE("denominators") {
  CHECK(denominators<Rational>(1, 2) == rationals({"-2", "1", "-2"}));
  CHECK(denominators<Rational>(2, 1) == rationals({"1", "-1/2", "1"}));
  CHECK(denominators<Rational>(1, 1) == rationals({"1", "-1"}));
  CHECK(denominators<Rational>(2, 3) == rationals({"12", "-3", "2", "-3", "12"}));
  // closed form (-1)^{p-1-j} j! (N-1-j)! / d!
  for (int d = 1; d <= 5; ++d)
    for (int p = 1; p <= 6; ++p) {
      const auto dj = denominators<Rational>(d, p);
      const int n = p + d;
      REQUIRE(dj.size() == static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        Rational expect = factorial(j) * factorial(n - 1 - j) / factorial(d);
        if ((p - 1 - j) % 2 != 0) expect = -expect;
        CHECK(dj[j] == expect);
      }
    }
}

TEST_CASE("numerators are elementary symmetric sums of the other nodes") {
  const auto pr = derive_params(q("2"), 2, 2, q("1"));  // lambda = 1, nodes 1, 0, -1, -2
  const auto nj = numerators(pr);
  CHECK(nj == rationals({"-3", "-2", "-1", "0"}));
}

TEST_CASE("worked coefficient examples") {
  CHECK(beta_q(q("2"), 2, 2, q("1")) == rationals({"1", "-2", "1", "0"}));
  CHECK(beta_q(q("4/5"), 1, 2, q("1")) == rationals({"1/4", "1/2", "-3/4"}));
  CHECK(beta_q(q("1"), 1, 1, q("0")) == rationals({"1", "-1"}));
  // alpha = 1.6, d = 2, p = 2, r = 1: lambda = 5/4
  CHECK(beta_q(q("8/5"), 2, 2, q("1")) == rationals({"3/4", "-5/4", "1/4", "1/4"}));
}

TEST_CASE("compact rows with their leading error") {
  for (const auto& row : reference::kCompactForms) {
    CAPTURE(row.name);
    const auto cv = beta_coefficients(derive_params(Rational(row.alpha), row.d, row.p, q(row.r)));
    std::vector<Rational> expect;
    for (const auto& w : row.weights) expect.push_back(q(w));
    CHECK(cv.beta == expect);
    CHECK(error_coefficients(cv, 1).leading() == q(row.error));
  }
}

TEST_CASE("backward difference generators") {
  const auto& table = reference::kBackwardDifference;
  for (int p = 1; p <= static_cast<int>(table.size()); ++p) {
    CAPTURE(p);
    const auto beta = beta_q(q("1"), 1, p, q("0"));
    REQUIRE(beta.size() == table[p - 1].size());
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (p == 2 && j == 2) continue;  // printed as 3/2
      CHECK(beta[j] == q(table[p - 1][j]));
    }
  }
  // The printed 3/2 fails consistency; 1/2 satisfies it.
  CHECK(beta_q(q("1"), 1, 2, q("0"))[2] == q("1/2"));
  CHECK(q("3/2") - q("2") + q("3/2") != 0);
}

TEST_CASE("lambda-polynomial tables sampled at several shifts") {
  for (const auto* table : {&reference::kBaseOrder1, &reference::kBaseOrder2, &reference::kBaseOrder3}) {
    for (int p = 1; p <= static_cast<int>(table->rows.size()); ++p) {
      const auto& row = table->rows[p - 1];
      for (const auto& ls : reference::kSampleLambdas) {
        CAPTURE(table->d);
        CAPTURE(p);
        CAPTURE(ls);
        const Rational lambda = q(ls);
        // alpha = d so lambda = r
        const auto beta = beta_q(Rational(table->d), table->d, p, lambda);
        REQUIRE(beta.size() == row.size());
        for (std::size_t j = 0; j < beta.size(); ++j) CHECK(beta[j] == reference::eval_poly(row[j], lambda));
      }
    }
  }
}

TEST_CASE("consistency moments") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dd(1, 5), pp(1, 6), num(-40, 40), den(1, 12), anum(1, 30);
  for (int t = 0; t < 100; ++t) {
    const int d = dd(rng), p = pp(rng);
    const Rational alpha(anum(rng), den(rng)), r(num(rng), den(rng));
    const auto cv = beta_coefficients(derive_params(alpha, d, p, r));
    for (int k = 0; k < p + d; ++k) CHECK(power_moment(cv, k) == (k == d ? factorial(d) : Rational(0)));
  }
}

TEST_CASE("mirror symmetry beta_j(r) = (-1)^d beta_{N-1-j}(N-1-r)") {
  for (int d = 1; d <= 4; ++d)
    for (int p = 1; p <= 5; ++p)
      for (const auto* rs : {"0", "1/3", "1", "5/2"}) {
        const int n = p + d;
        const auto a = beta_q(Rational(d), d, p, q(rs));
        const auto b = beta_q(Rational(d), d, p, Rational(n - 1) - q(rs));
        for (int j = 0; j < n; ++j) CHECK(a[j] == (d % 2 ? Rational(-b[n - 1 - j]) : b[n - 1 - j]));
      }
}

TEST_CASE("central stencils are palindromic up to sign") {
  for (int d = 1; d <= 4; ++d)
    for (int p = 2; p <= 6; p += 2) {
      const int n = p + d;
      const auto beta = beta_q(Rational(d), d, p, Rational(n - 1, 2));
      for (int j = 0; j < n; ++j) CHECK(beta[j] == (d % 2 ? Rational(-beta[n - 1 - j]) : beta[n - 1 - j]));
    }
}

TEST_CASE("error coefficients agree with the symbol expansion") {
  SUBCASE("compact, exact") {
    for (int d = 1; d <= 3; ++d)
      for (int p = 1; p <= 5; ++p)
        for (const auto* rs : {"0", "1/2", "1", "7/3"}) {
          const auto cv = beta_coefficients(derive_params(Rational(d), d, p, q(rs)));
          const auto err = error_coefficients(cv, p);
          const auto g = formal::symbol_series(cv.beta, d, Rational(1), q(rs), 2 * p + 1);
          CHECK(g[0] == 1);
          for (int m = 1; m < p; ++m) CHECK(g[m] == 0);
          for (int m = p; m < 2 * p; ++m) CHECK(g[m] == err.a.at(m));
        }
  }
  SUBCASE("fractional, high precision") {
    PrecisionScope scope(40);
    for (const auto* as : {"1/2", "8/5", "2.7"}) {
      for (int d = 1; d <= 2; ++d)
        for (int p = 1; p <= 4; ++p) {
          const BigFloat alpha = from_rational<BigFloat>(q(as));
          const BigFloat r(1);
          const auto cv = beta_coefficients(derive_params(alpha, d, p, r));
          const auto err = error_coefficients(cv, p);
          const auto g = formal::symbol_series(cv.beta, d, cv.params.gamma(), r, 2 * p + 1);
          CHECK(abs(g[0] - 1) < BigFloat("1e-30"));
          for (int m = 1; m < p; ++m) CHECK(abs(g[m]) < BigFloat("1e-30"));
          for (int m = p; m < 2 * p; ++m) CHECK(abs(g[m] - err.a.at(m)) < BigFloat("1e-30"));
        }
    }
  }
}

TEST_CASE("error coefficient range") {
  const auto cv = beta_coefficients(derive_params(q("2"), 2, 2, q("1")));
  CHECK(error_coefficients(cv, 0).a.empty());
  CHECK(error_coefficients(cv, 2).a.size() == 2);
  CHECK_THROWS_AS(error_coefficients(cv, 3), std::invalid_argument);
  CHECK_THROWS_AS(error_coefficients(cv, -1), std::invalid_argument);
  // central second difference: a_2 = 1/12, and it is not superconvergent
  CHECK(error_coefficients(cv, 1).leading() == q("1/12"));
  CHECK_FALSE(error_coefficients(cv, 1).superconvergent());
}

TEST_CASE("superconvergent shift") {
  // d = 1, p = 1 at r = 1/2 is the midpoint difference: a_1 = 0
  const auto cv = beta_coefficients(derive_params(q("1"), 1, 1, q("1/2")));
  const auto err = error_coefficients(cv, 1);
  CHECK(err.superconvergent());
}

TEST_CASE("numerator op tally") {
  OpCount ops;
  numerators(derive_params(Rational(10), 10, 10, Rational(0)), &ops);
  CHECK(ops.additions == 950);
  CHECK(ops.multiplications == 969);
  CHECK(ops.additions <= 1000);
}

TEST_CASE("the same coefficients in every field") {
  const auto exact = beta_q(q("8/5"), 2, 3, q("1/2"));
  const auto fd = beta_coefficients(derive_params(1.6, 2, 3, 0.5)).beta;
  PrecisionScope scope(50);
  const auto fb = beta_coefficients(derive_params(BigFloat("1.6"), 2, 3, BigFloat("0.5"))).beta;
  for (std::size_t j = 0; j < exact.size(); ++j) {
    CHECK(fd[j] == doctest::Approx(to_double(exact[j])).epsilon(1e-13));
    CHECK(abs(fb[j] - from_rational<BigFloat>(exact[j])) < BigFloat("1e-45"));
  }
}

TEST_CASE("generator polynomial evaluates at z = 1 to zero for d >= 1") {
  const auto cv = beta_coefficients(derive_params(q("3"), 3, 4, q("2")));
  const auto poly = generator_polynomial(cv);
  CHECK(poly.size() == 7);
  CHECK(poly(Rational(1)) == 0);
}
