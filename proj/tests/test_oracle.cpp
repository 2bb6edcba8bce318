#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reference_tables.hpp"
#include "unifd/oracle.hpp"

using namespace unifd;
using reference::q;

TEST_CASE("determinant") {
  Matrix<Rational> a(3, 3);
  const int vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = vals[i][j];
  CHECK(oracle::determinant(a) == 4);

  Matrix<Rational> b(2, 2);  // needs a row swap
  b(0, 0) = 0, b(0, 1) = 1, b(1, 0) = 1, b(1, 1) = 0;
  CHECK(oracle::determinant(b) == -1);

  Matrix<Rational> s(2, 2);
  s(0, 0) = 1, s(0, 1) = 2, s(1, 0) = 2, s(1, 1) = 4;
  CHECK(oracle::determinant(s) == 0);
  CHECK_THROWS_AS(oracle::determinant(Matrix<Rational>(2, 3)), std::invalid_argument);
}

TEST_CASE("Vandermonde determinant is the product of differences") {
  const std::vector<Rational> xs = {q("1/2"), q("-3"), q("2"), q("7/3"), q("0")};
  CHECK(oracle::determinant(oracle::vandermonde_matrix(xs)) == oracle::vandermonde_determinant_product(xs));
}

TEST_CASE("Cramer solve reproduces small examples") {
  CHECK(oracle::vandermonde_solve(derive_params(q("2"), 2, 2, q("1"))) ==
        std::vector<Rational>{q("1"), q("-2"), q("1"), q("0")});
  CHECK(oracle::vandermonde_solve(derive_params(q("4/5"), 1, 2, q("1"))) ==
        std::vector<Rational>{q("1/4"), q("1/2"), q("-3/4")});
}

TEST_CASE("elementary symmetric polynomials") {
  const std::vector<Rational> xs = {q("1"), q("2"), q("3"), q("4")};
  CHECK(oracle::esp_direct(xs, 0) == 1);
  CHECK(oracle::esp_direct(xs, 1) == 10);
  CHECK(oracle::esp_direct(xs, 2) == 35);
  CHECK(oracle::esp_direct(xs, 3) == 50);
  CHECK(oracle::esp_direct(xs, 4) == 24);
  CHECK_THROWS_AS(oracle::esp_direct(xs, 5), std::invalid_argument);
  OpCount ops;
  oracle::esp_direct(xs, 2, &ops);
  CHECK(ops.additions == 6);
  CHECK(ops.multiplications == 12);
}

TEST_CASE("variant Vandermonde determinant identity") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> xs(n);
      for (auto& x : xs) x = Rational(num(rng), den(rng));
      const Rational v = oracle::determinant(oracle::vandermonde_matrix(xs));
      for (int k = 0; k <= n; ++k)
        CHECK(oracle::determinant(oracle::variant_vandermonde_matrix(xs, k)) == v * oracle::esp_direct(xs, n - k));
    }
}

TEST_CASE("direct numerators agree with the recurrences") {
  for (int d = 1; d <= 4; ++d)
    for (int p = 1; p <= 5; ++p)
      for (const auto* ls : {"0", "1/3", "5/2"}) {
        const auto pr = derive_params(Rational(d), d, p, q(ls));
        CHECK(oracle::numerators_direct(pr).first == numerators(pr));
      }
}

TEST_CASE("direct numerator cost") {
  CHECK(oracle::binomial_count(19, 9) == 92378);
  CHECK(oracle::binomial_count(5, 7) == 0);
  const auto pr = derive_params(Rational(10), 10, 10, Rational(0));
  const auto [values, ops] = oracle::numerators_direct(pr);
  CHECK(ops.additions == 1'847'560);
  CHECK(ops.multiplications == 16'628'040);
  CHECK(values == numerators(pr));
  CHECK_THROWS_AS(oracle::numerators_direct(pr, 1000), oracle::BudgetExceeded);
}

TEST_CASE("consistency moments") {
  const auto cv = beta_coefficients(derive_params(q("3"), 3, 4, q("3")));
  const auto b = oracle::consistency_moments(cv, 8);
  for (int k = 0; k < 7; ++k) CHECK(b[k] == (k == 3 ? Rational(1) : Rational(0)));
  // a_4 = (alpha/d) b_{p+d}
  CHECK(b[7] == q("-7/120"));
  CHECK_THROWS_AS(oracle::consistency_moments(cv, 5), std::invalid_argument);
}

TEST_CASE("moments of the third-order first-difference base") {
  const auto cv = beta_coefficients(derive_params(q("2"), 1, 3, q("1")));
  REQUIRE(cv.beta == std::vector<Rational>{q("23/24"), q("-7/8"), q("-1/8"), q("1/24")});
  const auto b = oracle::consistency_moments(cv, 4);
  CHECK(b == std::vector<Rational>{q("0"), q("1"), q("0"), q("0"), q("1/24")});
  CHECK(cv.params.gamma() * b[4] == q("1/12"));
  CHECK(error_coefficients(cv, 1).leading() == q("1/12"));
}

TEST_CASE("Grunwald moments") {
  const auto cv = beta_coefficients(derive_params(q("1"), 1, 1, q("0")));
  const auto b = oracle::consistency_moments(cv, 1);
  CHECK(b == std::vector<Rational>{q("0"), q("1")});
}

TEST_CASE("Cramer solve in floating point") {
  const auto pr = derive_params(1.6, 2, 2, 1.0);
  const auto beta = oracle::vandermonde_solve(pr);
  const std::vector<double> expect = {0.75, -1.25, 0.25, 0.25};
  for (std::size_t j = 0; j < 4; ++j) CHECK(beta[j] == doctest::Approx(expect[j]).epsilon(1e-12));
}
