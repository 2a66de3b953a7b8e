#include "latpath/schroder.hpp"

#include <string>

#include "latpath/errors.hpp"
#include "latpath/path_oracle.hpp"
#include "latpath/quadratic.hpp"

namespace latpath {

namespace {

TPoly one_minus_w_tpow(int step) {
  return TPoly(1) - TPoly::monomial(OmegaPoly::omega(), static_cast<std::size_t>(step));
}

BigInt signed_binomial(long n, long k, long sign_exp) {
  BigInt c = binomial(n, k);
  return sign_exp % 2 == 0 ? c : BigInt(-c);
}

// Column j: coefficients of t^(-j) (mu P_j - P_(j-1)) as a Laurent series.
LaurentSeries column_laurent(const TSeries& mu, const TPoly& pj, const TPoly& pj_prev,
                             int height) {
  TSeries x = mu * TSeries(pj, mu.order());
  x -= TSeries(pj_prev, mu.order());
  return LaurentSeries::from_series(x, -height);
}

void require_band(int k) {
  if (k < 1) throw InvalidArgument("band height must be >= 1");
}

TPoly dneg_unit(int k) { return delannoy_poly(k).poly.eval_omega(1).substitute_neg_t(); }

TPoly s_unit(int n) { return inverse_schroder_poly(n).poly.eval_omega(1); }

std::string idx(const char* name, int n) { return std::string(name) + "=" + std::to_string(n); }

}  // namespace

TSeries w_series(int step, long order) { return detail::quadratic_fixed_point(step, order); }

TSeries compressed_schroder_series(long order) {
  return detail::quadratic_fixed_point(1, order, 1);
}

PPoly w_p_poly(int n, int step) {
  if (step < 1) throw InvalidArgument("horizontal step length must be >= 1");
  PPoly p{n, step, false, {}};
  if (n < 0) return p;
  const TPoly base = one_minus_w_tpow(step);
  for (int j = 0; 2 * j <= n; ++j) {
    p.poly += TPoly::monomial(OmegaPoly(signed_binomial(n - j, j, j)),
                              static_cast<std::size_t>(2 * j)) *
              pow(base, static_cast<unsigned>(n - 2 * j));
  }
  return p;
}

PPoly w_p_poly_compressed(int n) {
  PPoly p = w_p_poly(n, 2);
  p.compressed = true;
  p.poly = p.poly.compress_even();
  return p;
}

LaurentSeries w_column_laurent(int height, int step, long order) {
  if (height < 0) throw InvalidArgument("column height must be >= 0");
  const TSeries mu = w_series(step, order + height);
  return column_laurent(mu, w_p_poly(height, step).poly, w_p_poly(height - 1, step).poly,
                        height);
}

TSeries w_column_gf(int height, int step, long order) {
  return laurent_split(w_column_laurent(height, step, order)).regular;
}

TSeries compressed_column_gf(int height, long order) {
  if (height < 0) throw InvalidArgument("column height must be >= 0");
  const TSeries mu = compressed_schroder_series(order + height);
  const LaurentSeries l = column_laurent(mu, w_p_poly_compressed(height).poly,
                                         w_p_poly_compressed(height - 1).poly, height);
  return laurent_split(l).regular;
}

RationalGF banded_w_gf(int k, int step) {
  require_band(k);
  return {w_p_poly(k - 1, step).poly, w_p_poly(k, step).poly};
}

RationalGF banded_w_gf_compressed(int k) {
  require_band(k);
  return {w_p_poly_compressed(k - 1).poly, w_p_poly_compressed(k).poly};
}

TriMatrix schroder_matrix_compressed(std::size_t n) {
  if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
  TriMatrix m(n);
  const long order = static_cast<long>(n) - 1;
  const TSeries mu = compressed_schroder_series(order);
  TSeries column = mu;  // t^j mu^(j+1)
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) m.set(i, j, column[static_cast<long>(i)]);
    column = (column * mu).shifted(1);
  }
  return m;
}

OmegaPoly inverse_schroder_entry(int k, int j) {
  if (j < 0 || j > k) {
    throw IndexOutOfTriangle("inverse Schroeder entry (" + std::to_string(k) + "," +
                             std::to_string(j) + ") outside the triangle");
  }
  OmegaPoly sum;
  for (int m = 0; m <= k - j; ++m) {
    BigInt num = binomial(k + 1 - 2 * m, k - j - m) * binomial(k - m + 1, m) * (j + 1);
    const BigInt den = k - m + 1;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
      throw InexactDivision("s_{" + std::to_string(k) + "," + std::to_string(j) +
                            "} term m=" + std::to_string(m) + " is not integral");
    }
    BigInt c = num / den;
    if ((k - j) % 2 == 1) c = -c;
    sum += OmegaPoly::monomial(c, static_cast<std::size_t>(k - j - m));
  }
  return sum;
}

SPoly inverse_schroder_poly(int n) {
  if (n < 0) throw InvalidArgument("index must be >= 0");
  const TPoly base = one_minus_w_tpow(1);
  const TPoly wt = TPoly::monomial(OmegaPoly::omega(), 1);
  TPoly sum;
  for (int m = 0; m <= n; ++m) {
    // (w t m / (n-m+1) - 1) C(n-m+1, m) == w t C(n-m, m-1) - C(n-m+1, m)
    TPoly factor = wt * OmegaPoly(binomial(n - m, m - 1)) - TPoly(OmegaPoly(binomial(n - m + 1, m)));
    if (factor.is_zero()) continue;
    const int e = n - 2 * m;
    if (e >= 0) {
      factor *= pow(base, static_cast<unsigned>(e));
    } else {
      factor = exact_div_unit(factor, pow(base, static_cast<unsigned>(-e)));
    }
    if ((m + 1) % 2 == 1) factor = -factor;
    sum += factor.shifted(static_cast<std::size_t>(m));
  }
  return {n, sum};
}

TriMatrix inverse_schroder_matrix(std::size_t n) {
  return unit_lower_inverse(schroder_matrix_compressed(n));
}

OmegaPoly delannoy_number(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("Delannoy indices must be >= 0");
  OmegaPoly sum;
  for (int l = 0; l <= n; ++l) {
    sum += OmegaPoly::monomial(binomial(k, l) * binomial(n + k - l, k), static_cast<std::size_t>(l));
  }
  return sum;
}

DPoly delannoy_poly(int k) {
  if (k < 0) throw InvalidArgument("index must be >= 0");
  const TPoly one_plus_t{1, 1};
  DPoly d{k, {}};
  for (int l = 0; 2 * l <= k; ++l) {
    d.poly += TPoly::monomial(OmegaPoly::monomial(binomial(k - l, l), static_cast<std::size_t>(l)),
                              static_cast<std::size_t>(l)) *
              pow(one_plus_t, static_cast<unsigned>(k - 2 * l));
  }
  return d;
}

CheckReport delannoy_recursion_check(int horizon) {
  if (horizon < 1) throw InvalidArgument("horizon must be >= 1");
  CheckReport report{"Delannoy recursion"};
  for (int n = 1; n <= horizon; ++n) {
    for (int j = 0; j <= horizon; ++j) {
      OmegaPoly rhs = delannoy_number(n - 1, n - 1 + j).shifted(1);
      rhs += delannoy_number(n, n + j - 1);
      rhs += delannoy_number(n - 1, n + j);
      report.compare(delannoy_number(n, n + j), rhs,
                     "(n,j)=(" + std::to_string(n) + "," + std::to_string(j) + ")");
    }
  }
  return report;
}

CheckReport delannoy_oracle_check(int horizon) {
  CheckReport report{"Delannoy vs grand paths"};
  const CountTable grand(PathSpec::grand(2), 2 * horizon);
  for (int n = 0; n <= horizon; ++n) {
    for (int j = 0; n + j <= horizon; ++j) {
      report.compare(delannoy_number(n, n + j), grand.at(2 * n + j, j),
                     "(n,j)=(" + std::to_string(n) + "," + std::to_string(j) + ")");
    }
  }
  return report;
}

CheckReport gould_identity_check(int k, int m) {
  if (m < 0 || 2 * m > k) throw InvalidArgument("Gould identity needs 0 <= m <= k/2");
  CheckReport report{"Gould/Carlitz"};
  Rational lhs = 0;
  for (int l = 0; l <= k + 1; ++l) {
    lhs += Rational(binomial(k + 1, l)) * binom_general(Rational(l, 2), static_cast<unsigned long>(m));
  }
  Rational rhs = Rational(k + 1, k - 2 * m + 1) * Rational(binomial(k - m, m));
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k + 1 - 2 * m));
  rhs *= Rational(pow2);
  lhs.canonicalize();
  rhs.canonicalize();
  report.record(lhs == rhs, "(k,m)=(" + std::to_string(k) + "," + std::to_string(m) + ")",
                lhs.get_str(), rhs.get_str());
  return report;
}

namespace unit_weight {

TSeries inverse_schroder_column_gf(int k, long order) {
  if (k < 0) throw InvalidArgument("column index must be >= 0");
  const TSeries ratio = TSeries(TPoly{1, -1}, order) * series_inv(TSeries(TPoly{1, 1}, order));
  return pow(ratio, static_cast<unsigned>(k) + 1).shifted(static_cast<std::size_t>(k));
}

RationalGF banded_schroder_gf(int k) {
  require_band(k);
  return {dneg_unit(k - 1), dneg_unit(k)};
}

namespace {

// (1-t) sum_{i: top-2i >= 0} (-1)^i t^(2i) s_(top-2i) + [top odd] (-1)^((top+1)/2) t^(top+1)
// which equals d_(top+1)(-t).
TPoly alternating_s_sum(int top) {
  TPoly sum;
  for (int i = 0; top - 2 * i >= 0; ++i) {
    TPoly term = s_unit(top - 2 * i).shifted(static_cast<std::size_t>(2 * i));
    sum += i % 2 == 0 ? term : -term;
  }
  sum *= TPoly{1, -1};
  if (top % 2 != 0) {
    const int e = (top + 1) / 2;
    const long sign = e % 2 == 0 ? 1 : -1;
    sum += TPoly::monomial(OmegaPoly(sign), static_cast<std::size_t>(top + 1));
  }
  return sum;
}

}  // namespace

RationalGF banded_schroder_gf_via_s(int k) {
  require_band(k);
  return {alternating_s_sum(k - 2), alternating_s_sum(k - 1)};
}

CheckReport delannoy_s_bridge_check(int n) {
  if (n < 1) throw InvalidArgument("bridge identities need n >= 1");
  CheckReport report{"Delannoy/inverse Schroeder bridge"};
  const TPoly t = TPoly::t();
  const TPoly one_minus_t{1, -1};
  const TPoly s_n = s_unit(n);
  const TPoly d_prev = dneg_unit(n - 1);
  const TPoly d_cur = dneg_unit(n);
  const TPoly d_next = dneg_unit(n + 1);

  // s_n = (t^2 d_(n-1)(-t) + d_(n+1)(-t)) / (1 - t), the division exact.
  report.compare(s_n, exact_div_unit(t * t * d_prev + d_next, one_minus_t),
                 idx("quotient form, n", n));
  // d_n(-t) - t d_(n-1)(-t) = s_n
  report.compare(d_cur - t * d_prev, s_n, idx("difference form, n", n));
  // t^n p_n(t) = d_n(-t) for the compressed p at w = 1
  report.compare(w_p_poly_compressed(n).poly.eval_omega(1), d_cur, idx("p/d bridge, n", n));
  // d_n(-t) = t d_n(-t) + t d_(n-1)(-t) + d_(n+1)(-t)
  report.compare(d_cur, t * d_cur + t * d_prev + d_next, idx("negated recurrence, n", n));
  return report;
}

TheoremResult theorem_schroeder_check(int k, long order) {
  if (k < 2) throw InvalidArgument("theorem check needs k >= 2");
  if (order < 0) throw InvalidArgument("series order must be >= 0");
  CheckReport report{"banded Schroeder top-row theorem k=" + std::to_string(k)};
  const long full = order + k;
  const TSeries s_band = series_from_rational(banded_schroder_gf(k), full);
  const TSeries product = s_band * TSeries(s_unit(k - 1), full);
  const TPoly s_prev = s_unit(k - 2);

  const LaurentSplit split = laurent_split(LaurentSeries::from_series(product, -k));

  const std::span<const OmegaPoly> sc = s_prev.coeffs();
  const LaurentSeries expected_principal(-k, {sc.begin(), sc.end()}, order);
  report.compare(expected_principal, split.principal, "principal part");

  const TSeries top_row =
      compressed_oracle_series(PathSpec::banded(k, 2), k - 1, full).eval_omega(1);
  for (long n = 0; n <= order; ++n) {
    report.compare(top_row[n + k - 1], split.regular[n], "regular t^" + std::to_string(n));
  }

  const TSeries difference = product - TSeries(s_prev, full);
  report.compare(OmegaPoly(), difference[0], "identity t^0");
  for (long m = 1; m <= full; ++m) {
    report.compare(top_row[m - 1], difference[m], "identity t^" + std::to_string(m));
  }
  return {report, split.principal, split.regular};
}

}  // namespace unit_weight

}  // namespace latpath
