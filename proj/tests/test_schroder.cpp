#include <algorithm>

#include "latpath/errors.hpp"
#include "latpath/motzkin.hpp"
#include "latpath/path_oracle.hpp"
#include "latpath/schroder.hpp"
#include "support.hpp"

using namespace latpath;
using test::W;
using Rows = std::vector<std::vector<long>>;
using Longs = std::vector<long>;

namespace {

// Coefficient of x^k in 1/(1 - u), u = x(1 + t) + w t x^2, as a TPoly in t.
TPoly bivariate_coefficient(int k) {
  // table[m][k] = coefficient of x^k in u^m
  const int top = k;
  std::vector<std::vector<TPoly>> table(static_cast<std::size_t>(top) + 1,
                                        std::vector<TPoly>(static_cast<std::size_t>(top) + 1));
  table[0][0] = TPoly{1};
  const TPoly one_t{1, 1};
  const TPoly wt = TPoly::monomial(OmegaPoly::omega(), 1);
  for (int m = 1; m <= top; ++m) {
    for (int e = 0; e <= top; ++e) {
      TPoly acc;
      if (e >= 1) acc += table[m - 1][e - 1] * one_t;
      if (e >= 2) acc += table[m - 1][e - 2] * wt;
      table[m][e] = acc;
    }
  }
  TPoly sum;
  for (int m = 0; m <= top; ++m) sum += table[m][k];
  return sum;
}

}  // namespace

TEST_CASE("w_series") {
  CHECK(w_series(1, 20) == motzkin_series(20));
  CHECK(w_series(3, 8)[6] == W("5+w^2"));
  CHECK(w_series(2, 6)[4] == W("2+3w+w^2"));
  for (int w = 1; w <= 3; ++w) {
    REQUIRE(w_series(w, 30) == oracle_series(PathSpec::quadrant(w), 0, 30));
  }
}

TEST_CASE("w_p_poly") {
  CHECK(w_p_poly(0, 2).poly == TPoly{1});
  CHECK(w_p_poly(-1, 3).poly.is_zero());
  CHECK(test::unit_coeffs(w_p_poly_compressed(2).poly) == Longs{1, -3, 1});
  CHECK(test::unit_coeffs(w_p_poly_compressed(3).poly) == Longs{1, -5, 5, -1});
  CHECK(w_p_poly(4, 1).poly == inverse_motzkin_poly(4));
  for (int n = 0; n <= 10; ++n) {
    for (int w = 1; w <= 3; ++w) {
      const PPoly p = w_p_poly(n, w);
      REQUIRE(p.poly[0] == W("1"));
      REQUIRE(p.poly.degree() <= static_cast<long>(n) * std::max(w, 2));
    }
    REQUIRE(w_p_poly_compressed(n).poly.degree() <= n);
  }
}

TEST_CASE("w_column_gf counts paths with no index offset") {
  const TSeries col = w_column_gf(1, 3, 8);
  const std::vector<const char*> printed = {"1", "0", "2", "2w", "5", "8w"};
  for (std::size_t i = 0; i < printed.size(); ++i) CHECK(col[static_cast<long>(i) + 1] == W(printed[i]));
  CHECK(col[0].is_zero());
  CHECK(w_column_gf(0, 3, 12) == w_series(3, 12));
  for (int w = 1; w <= 3; ++w) {
    for (int j = 0; j <= 5; ++j) {
      REQUIRE(w_column_gf(j, w, 20) == oracle_series(PathSpec::quadrant(w), j, 20));
    }
  }
  CHECK(laurent_split(w_column_laurent(2, 2, 6)).regular == w_column_gf(2, 2, 6));
}

TEST_CASE("compressed_column_gf reads each column from its diagonal") {
  for (int j = 0; j <= 5; ++j) {
    const TSeries col = compressed_column_gf(j, 12);
    for (long n = 0; n <= 12; ++n) {
      REQUIRE(col[n] == compress_schroder(static_cast<int>(n) + j, j));
    }
  }
  CHECK(compressed_column_gf(3, 4)[0] == W("1"));
}

TEST_CASE("banded_w_gf") {
  for (int k = 1; k <= 6; ++k) CHECK(banded_w_gf(k, 1) == banded_motzkin_gf(k).gf);
  CHECK(test::unit_coeffs(series_from_rational(banded_w_gf_compressed(2), 4)) ==
        Longs{1, 2, 5, 13, 34});
  CHECK(test::unit_coeffs(series_from_rational(banded_w_gf_compressed(4), 6)) ==
        Longs{1, 2, 6, 22, 89, 377, 1630});
  for (int w = 1; w <= 3; ++w) {
    for (int k = 1; k <= 5; ++k) {
      REQUIRE(series_from_rational(banded_w_gf(k, w), 30) ==
              oracle_series(PathSpec::banded(k, w), 0, 30));
    }
  }
  for (int k = 1; k <= 6; ++k) {
    REQUIRE(series_from_rational(banded_w_gf_compressed(k), 30) ==
            compressed_oracle_series(PathSpec::banded(k, 2), 0, 30));
  }
  CHECK_THROWS_AS(banded_w_gf(0, 2), InvalidArgument);
}

TEST_CASE("schroder_matrix_compressed") {
  CHECK(test::unit_rows(schroder_matrix_compressed(5)) ==
        Rows{{1}, {2, 1}, {6, 4, 1}, {22, 16, 6, 1}, {90, 68, 30, 8, 1}});
  const TriMatrix m = schroder_matrix_compressed(12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(m(i, i) == W("1"));
    for (std::size_t j = 0; j <= i; ++j) {
      REQUIRE(m(i, j) == compress_schroder(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  CHECK(m(2, 0) == W("2+3w+w^2"));
}

TEST_CASE("inverse Schroeder entries and polynomials") {
  CHECK(inverse_schroder_entry(4, 1).eval(1) == -12);
  CHECK(inverse_schroder_entry(2, 0).eval(1) == 2);
  for (int k = 0; k < 10; ++k) CHECK(inverse_schroder_entry(k, k) == W("1"));
  CHECK_THROWS_AS(inverse_schroder_entry(1, 2), IndexOutOfTriangle);
  CHECK(test::unit_coeffs(inverse_schroder_poly(4).poly) == Longs{1, -8, 18, -12, 2});
  CHECK(inverse_schroder_poly(0).poly == TPoly{1});
  CHECK(test::unit_coeffs(inverse_schroder_poly(3).poly) == Longs{1, -6, 8, -2});
  for (int n = 0; n <= 20; ++n) {
    const TPoly s = inverse_schroder_poly(n).poly;
    REQUIRE(s[0] == W("1"));
    for (int k = 0; k <= n; ++k) REQUIRE(s[static_cast<std::size_t>(n - k)] == inverse_schroder_entry(n, k));
  }
}

TEST_CASE("inverse_schroder_matrix") {
  CHECK(test::unit_rows(inverse_schroder_matrix(5)) ==
        Rows{{1}, {-2, 1}, {2, -4, 1}, {-2, 8, -6, 1}, {2, -12, 18, -8, 1}});
  const std::size_t n = 31;
  const TriMatrix inv = inverse_schroder_matrix(n);
  CHECK(schroder_matrix_compressed(n) * inv == TriMatrix::identity(n));
  for (int k = 0; k < static_cast<int>(n); ++k) {
    for (int j = 0; j <= k; ++j) {
      REQUIRE(inv(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) == inverse_schroder_entry(k, j));
    }
  }
}

TEST_CASE("inverse Schroeder column generating functions at unit weight") {
  CHECK(test::unit_coeffs(unit_weight::inverse_schroder_column_gf(0, 4)) == Longs{1, -2, 2, -2, 2});
  const Longs c1 = test::unit_coeffs(unit_weight::inverse_schroder_column_gf(1, 4));
  CHECK(Longs(c1.begin() + 1, c1.end()) == Longs{1, -4, 8, -12});
  const Longs c2 = test::unit_coeffs(unit_weight::inverse_schroder_column_gf(2, 4));
  CHECK(Longs(c2.begin() + 2, c2.end()) == Longs{1, -6, 18});
  const TriMatrix inv = inverse_schroder_matrix(16).eval_omega(1);
  for (int k = 0; k < 16; ++k) {
    const TSeries col = unit_weight::inverse_schroder_column_gf(k, 15);
    for (int n = 0; n < 16; ++n) {
      REQUIRE(col[n] == (n >= k ? inv(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) : OmegaPoly()));
    }
  }
}

TEST_CASE("Delannoy numbers and polynomials") {
  CHECK(delannoy_number(2, 2).eval(1) == 13);
  CHECK(delannoy_number(3, 3).eval(1) == 63);
  for (int n = 0; n <= 6; ++n) CHECK(delannoy_number(n, 0) == W("1"));
  CHECK(delannoy_number(1, 1) == W("2+w"));
  CHECK(test::unit_coeffs(delannoy_poly(3).poly) == Longs{1, 5, 5, 1});
  CHECK(delannoy_poly(0).poly == TPoly{1});
  CHECK(test::unit_coeffs(delannoy_poly(4).poly) == Longs{1, 7, 13, 7, 1});
  for (int k = 0; k <= 30; ++k) {
    const TPoly d = delannoy_poly(k).poly;
    REQUIRE(d.degree() == k);
    REQUIRE(d[0] == W("1"));
    for (int j = 0; j <= k; ++j) REQUIRE(d[static_cast<std::size_t>(j)] == delannoy_number(k - j, j));
  }
}

TEST_CASE("Delannoy generating function to total degree 12") {
  for (int k = 0; k <= 12; ++k) REQUIRE(bivariate_coefficient(k) == delannoy_poly(k).poly);
}

TEST_CASE("Delannoy checks") {
  CHECK(delannoy_recursion_check(15).passed());
  CHECK(delannoy_oracle_check(10).passed());
  CHECK_THROWS_AS(delannoy_recursion_check(0), InvalidArgument);
}

TEST_CASE("banded Schroeder generating functions at unit weight") {
  const Longs band4{1,        2,         6,         22,        89,         377,
                    1630,     7110,      31130,     136513,    599041,     2629418,
                    11542854, 50674318,  222470009, 976694489, 4287928678L};
  CHECK(test::unit_coeffs(series_from_rational(unit_weight::banded_schroder_gf(4), 16)) == band4);
  CHECK(test::unit_coeffs(series_from_rational(unit_weight::banded_schroder_gf(1), 5)) ==
        Longs{1, 1, 1, 1, 1, 1});
  CHECK(test::unit_coeffs(series_from_rational(unit_weight::banded_schroder_gf(2), 4)) ==
        Longs{1, 2, 5, 13, 34});
  CHECK(series_from_rational(unit_weight::banded_schroder_gf_via_s(4), 16) ==
        series_from_rational(unit_weight::banded_schroder_gf(4), 16));
  CHECK(series_from_rational(unit_weight::banded_schroder_gf_via_s(1), 8) ==
        series_from_rational(unit_weight::banded_schroder_gf(1), 8));
  CHECK(series_from_rational(unit_weight::banded_schroder_gf_via_s(3), 30) ==
        series_from_rational(unit_weight::banded_schroder_gf(3), 30));
  for (int k = 1; k <= 6; ++k) {
    const TSeries oracle = compressed_oracle_series(PathSpec::banded(k, 2), 0, 40).eval_omega(1);
    REQUIRE(series_from_rational(unit_weight::banded_schroder_gf(k), 40) == oracle);
    REQUIRE(series_from_rational(unit_weight::banded_schroder_gf_via_s(k), 40) == oracle);
    REQUIRE(series_from_rational(banded_w_gf_compressed(k).eval_omega(1), 40) == oracle);
  }
}

TEST_CASE("bridge identities") {
  CHECK(unit_weight::delannoy_s_bridge_check(3).passed());
  CHECK(unit_weight::delannoy_s_bridge_check(1).passed());
  for (int n = 1; n <= 20; ++n) REQUIRE(unit_weight::delannoy_s_bridge_check(n).passed());
  CHECK_THROWS_AS(unit_weight::delannoy_s_bridge_check(0), InvalidArgument);
  for (int k = 0; k <= 25; ++k) {
    REQUIRE(w_p_poly_compressed(k).poly.eval_omega(1) ==
            delannoy_poly(k).poly.eval_omega(1).substitute_neg_t());
  }
}

TEST_CASE("theorem on the top row of the band") {
  const auto r = unit_weight::theorem_schroeder_check(4, 12);
  CHECK(r.report.passed());
  CHECK(r.principal == LaurentSeries(-4, {1, -4, 2}, 12));
  CHECK(test::unit_coeffs(r.regular) == Longs{1, 7, 36, 168, 756, 3353, 14783, 65016, 285648,
                                              1254456, 5508097, 24183271, 106173180});
  const auto two = unit_weight::theorem_schroeder_check(2, 10);
  CHECK(two.report.passed());
  const TSeries top = compressed_oracle_series(PathSpec::banded(2, 2), 1, 11).eval_omega(1);
  for (long n = 0; n <= 10; ++n) CHECK(two.regular[n] == top[n + 1]);
  for (int k = 2; k <= 6; ++k) REQUIRE(unit_weight::theorem_schroeder_check(k, 40).report.passed());
  CHECK_THROWS_AS(unit_weight::theorem_schroeder_check(1, 5), InvalidArgument);
}

TEST_CASE("Gould identity") {
  CHECK(gould_identity_check(2, 1).passed());
  for (int k = 0; k <= 20; ++k) {
    REQUIRE(gould_identity_check(k, 0).passed());
    for (int m = 0; 2 * m <= k; ++m) REQUIRE(gould_identity_check(k, m).passed());
  }
  CHECK_THROWS_AS(gould_identity_check(3, 2), InvalidArgument);
}
