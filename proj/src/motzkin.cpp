#include "latpath/motzkin.hpp"

#include <string>

#include "latpath/errors.hpp"
#include "latpath/path_oracle.hpp"
#include "latpath/quadratic.hpp"

namespace latpath {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_triangle(int i, int j) {
  if (j < 0 || j > i) {
    throw IndexOutOfTriangle("inverse Motzkin entry " + at(i, j) + " outside the triangle");
  }
}

OmegaPoly signed_omega_power(int e) {
  // (-w)^e
  return OmegaPoly::monomial(e % 2 == 0 ? 1 : -1, static_cast<std::size_t>(e));
}

TriMatrix from_columns(std::size_t n, const auto& column_gf) {
  TriMatrix m(n);
  const long order = static_cast<long>(n) - 1;
  for (std::size_t j = 0; j < n; ++j) {
    const TSeries col = column_gf(static_cast<int>(j), order);
    for (std::size_t i = j; i < n; ++i) m.set(i, j, col[static_cast<long>(i)]);
  }
  return m;
}

}  // namespace

TSeries motzkin_series(long order) { return detail::quadratic_fixed_point(1, order); }

TSeries grand_motzkin_series(long order) {
  const TSeries mu = motzkin_series(order);
  // 1 - w t - 2 t^2 mu equals the square root sqrt((1 - w t)^2 - 4 t^2).
  TSeries root = TSeries(TPoly({OmegaPoly(1), -OmegaPoly::omega()}), order);
  root -= (mu * OmegaPoly(2)).shifted(2);
  return series_inv(root);
}

TSeries motzkin_column_gf(int height, long order) {
  if (height < 0) throw InvalidArgument("column height must be >= 0");
  return pow(motzkin_series(order), static_cast<unsigned>(height) + 1);
}

TSeries grand_column_gf(int height, long order) {
  if (height < 0) throw InvalidArgument("column height must be >= 0");
  // (1 - w t - 1/g) / (2t) = t mu
  const TSeries t_mu = motzkin_series(order).shifted(1);
  return grand_motzkin_series(order) * pow(t_mu, static_cast<unsigned>(height));
}

TriMatrix motzkin_matrix(std::size_t n) {
  if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
  return from_columns(n, [](int j, long order) {
    return motzkin_column_gf(j, order).shifted(static_cast<std::size_t>(j));
  });
}

TriMatrix grand_matrix(std::size_t n) {
  if (n < 1) throw InvalidArgument("matrix dimension must be >= 1");
  return from_columns(n, [](int j, long order) { return grand_column_gf(j, order); });
}

OmegaPoly motzkin_closed(int n) {
  if (n < 0) throw InvalidArgument("index must be >= 0");
  OmegaPoly sum;
  for (int k = 0; 2 * k <= n; ++k) {
    sum += OmegaPoly::monomial(binomial(n, 2 * k) * catalan(static_cast<unsigned>(k)),
                               static_cast<std::size_t>(n - 2 * k));
  }
  return sum;
}

BigInt catalan(unsigned n) {
  BigInt c = binomial(2L * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1UL);
  return c;
}

BigInt motzkin_from_catalan(unsigned n) {
  BigInt sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt term = binomial(n, k) * catalan(k + 1);
    if ((n - k) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

OmegaPoly inverse_motzkin_entry(int i, int j) {
  check_triangle(i, j);
  OmegaPoly sum;
  for (int l = 0; 2 * l <= i - j; ++l) {
    BigInt c = binomial(i - l, i - j - l) * binomial(i - j - l, l);
    if (l % 2 == 1) c = -c;
    sum += signed_omega_power(i - j - 2 * l) * c;
  }
  return sum;
}

OmegaPoly inverse_motzkin_entry_rec(int i, int j) {
  check_triangle(i, j);
  // Column j: m_{j-1,j} = 0, m_{j,j} = 1, then the recurrence upward.
  OmegaPoly older;      // m_{r-2, j}
  OmegaPoly newer = 1;  // m_{r-1, j}
  for (int r = j + 1; r <= i; ++r) {
    OmegaPoly rhs = -(newer.shifted(1) * BigInt(r));
    rhs -= older * BigInt(r + j);
    OmegaPoly next = exact_div(rhs, BigInt(r - j));
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

TriMatrix inverse_motzkin_matrix(std::size_t n) { return unit_lower_inverse(motzkin_matrix(n)); }

TPoly inverse_motzkin_poly(int k) {
  if (k < 0) throw InvalidArgument("index must be >= 0");
  const TPoly one_minus_wt({OmegaPoly(1), -OmegaPoly::omega()});
  TPoly sum;
  for (int l = 0; 2 * l <= k; ++l) {
    BigInt c = binomial(k - l, l);
    if (l % 2 == 1) c = -c;
    sum += TPoly::monomial(OmegaPoly(c), static_cast<std::size_t>(2 * l)) *
           pow(one_minus_wt, static_cast<unsigned>(k - 2 * l));
  }
  return sum;
}

BandedGF banded_motzkin_gf(int k) {
  if (k < 1) throw InvalidArgument("band height must be >= 1");
  return {k, RationalGF{inverse_motzkin_poly(k - 1), inverse_motzkin_poly(k)}, 0};
}

CheckReport verify_lemma(int i, int j) {
  CheckReport report{"lemma " + at(i, j)};
  const int reach = i + j + 2;
  const TSeries motzkin = oracle_series(PathSpec::quadrant(1), 0, reach);
  const OmegaPoly path_count = count_paths(PathSpec::quadrant(1), i, j);

  OmegaPoly first;
  for (int k = 0; k <= j; ++k) first.add_product(inverse_motzkin_entry(j, k), motzkin[i + k]);
  report.compare(path_count, first, "first identity at " + at(i, j));

  OmegaPoly second;
  for (int k = 0; k <= i - j; ++k) {
    second.add_product(inverse_motzkin_entry(i + 1, j + 1 + k), motzkin[k]);
  }
  const OmegaPoly lhs = j <= i ? inverse_motzkin_entry(i, j) : OmegaPoly();
  report.compare(lhs, second, "second identity at " + at(i, j));
  return report;
}

CheckReport verify_lemma_range(int max_index) {
  CheckReport report{"lemma"};
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) report.merge(verify_lemma(i, j));
  }
  return report;
}

CheckReport verify_orthogonality(int max_index) {
  CheckReport report{"orthogonality"};
  const TSeries motzkin = oracle_series(PathSpec::quadrant(1), 0, 2L * max_index + 1);
  for (int j = 0; j <= max_index; ++j) {
    for (int i = 0; i <= j; ++i) {
      OmegaPoly sum;
      for (int k = 0; k <= j; ++k) sum.add_product(inverse_motzkin_entry(j, k), motzkin[i + k]);
      report.compare(OmegaPoly(i == j ? 1 : 0), sum, "(i,j)=" + at(i, j));
    }
  }
  return report;
}

CheckReport banded_motzkin_recursion_check(int k, int horizon) {
  if (k < 1) throw InvalidArgument("band height must be >= 1");
  CheckReport report{"banded recursion k=" + std::to_string(k)};
  const TSeries banded = oracle_series(PathSpec::banded(k, 1), 0, horizon);
  for (int n = 0; n <= horizon; ++n) {
    OmegaPoly sum;
    for (int j = 0; j <= std::min(n, k); ++j) {
      sum.add_product(banded[n - j], inverse_motzkin_entry(k, k - j));
    }
    const OmegaPoly expected = n >= k ? OmegaPoly() : inverse_motzkin_entry(k - 1, k - 1 - n);
    report.compare(expected, sum, "n=" + std::to_string(n));
  }
  return report;
}

CheckReport first_return_check(int horizon) {
  CheckReport report{"first return"};
  const TSeries m = oracle_series(PathSpec::quadrant(1), 0, horizon + 2);
  for (int n = 0; n <= horizon; ++n) {
    OmegaPoly lhs = m[n + 2] - m[n + 1].shifted(1);
    OmegaPoly rhs;
    for (int i = 0; i <= n; ++i) rhs.add_product(m[i], m[n - i]);
    report.compare(lhs, rhs, "n=" + std::to_string(n));
  }
  return report;
}

CheckReport riordan_recurrence_check(std::size_t n) {
  CheckReport report{"Riordan recurrence"};
  const int size = static_cast<int>(n);
  for (const PathSpec spec : {PathSpec::grand(1), PathSpec::quadrant(1)}) {
    const CountTable table(spec, size + 1);
    const std::string tag = spec.mode == PathMode::grand ? "G" : "M";
    for (int x = 0; x < size; ++x) {
      for (int j = 0; j <= x; ++j) {
        OmegaPoly rhs = table.at(x, j) + table.at(x, j + 1).shifted(1) + table.at(x, j + 2);
        report.compare(table.at(x + 1, j + 1), rhs, tag + at(x + 1, j + 1));
      }
    }
  }
  return report;
}

}  // namespace latpath

namespace latpath::detail {

TSeries quadratic_fixed_point(int step, long order, int pair) {
  if (step < 1) throw InvalidArgument("horizontal step length must be >= 1");
  if (pair < 1) throw InvalidArgument("up/down pair degree must be >= 1");
  if (order < 0) throw InvalidArgument("series order must be >= 0");
  std::vector<OmegaPoly> f(static_cast<std::size_t>(order) + 1);
  f[0] = 1;
  for (long n = 1; n <= order; ++n) {
    OmegaPoly acc;
    if (n >= step) acc = f[static_cast<std::size_t>(n - step)].shifted(1);
    for (long i = 0; i + pair <= n; ++i) {
      acc.add_product(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(n - pair - i)]);
    }
    f[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return TSeries(std::move(f), order);
}

}  // namespace latpath::detail
