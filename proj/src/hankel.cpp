#include "latpath/hankel.hpp"

#include <string>
#include <utility>

#include "latpath/errors.hpp"
#include "latpath/kernels.hpp"
#include "latpath/motzkin.hpp"

namespace latpath {

SquareMatrix SquareMatrix::from_rows(std::vector<std::vector<OmegaPoly>> rows) {
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidArgument("matrix is not square");
  }
  SquareMatrix m;
  m.entries = std::move(rows);
  return m;
}

OmegaPoly det_fraction_free(const SquareMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  kernels::Grid a = m.entries;
  bool negate = false;
  OmegaPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    kernels::parallel::bareiss_step(a, k, prev);
    prev = a[k][k];
  }
  OmegaPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

namespace {

OmegaPoly cofactor_rec(const std::vector<std::vector<OmegaPoly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  OmegaPoly sum;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<OmegaPoly>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) minor[r - 1].push_back(a[r][cc]);
      }
    }
    OmegaPoly term = a[0][c] * cofactor_rec(minor);
    if (c % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

OmegaPoly motzkin_at(const std::vector<OmegaPoly>& seq, std::size_t idx) { return seq.at(idx); }

}  // namespace

OmegaPoly det_cofactor(const SquareMatrix& m) {
  if (m.size() > 8) throw InvalidArgument("cofactor expansion limited to dimension 8");
  return cofactor_rec(m.entries);
}

SquareMatrix hankel_matrix(const HankelSpec& spec) {
  if (spec.n < 1) throw InvalidArgument("Hankel dimension must be >= 1");
  if (spec.shift < 0 || spec.shift > 2) throw InvalidArgument("Hankel shift must be 0, 1 or 2");
  if (spec.alpha.is_zero() && spec.beta.is_zero()) {
    throw InvalidArgument("alpha and beta cannot both be zero");
  }
  const long top = 2 * static_cast<long>(spec.n) + spec.shift;
  const TSeries mu = motzkin_series(top);
  std::vector<OmegaPoly> seq(mu.coeffs().begin(), mu.coeffs().end());
  SquareMatrix h(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      const std::size_t idx = i + j + static_cast<std::size_t>(spec.shift);
      OmegaPoly v = spec.alpha * motzkin_at(seq, idx);
      v.add_product(spec.beta, motzkin_at(seq, idx + 1));
      h(i, j) = std::move(v);
    }
  }
  return h;
}

OmegaPoly shifted_hankel_closed(std::size_t n, const OmegaPoly& alpha, const OmegaPoly& beta) {
  const OmegaPoly neg_beta = -beta;
  OmegaPoly sum;
  for (std::size_t i = 0; i <= n; ++i) {
    OmegaPoly term = pow(neg_beta, static_cast<unsigned>(n - i)) * pow(alpha, static_cast<unsigned>(i));
    sum.add_product(term, inverse_motzkin_entry(static_cast<int>(n), static_cast<int>(i)));
  }
  return sum;
}

OmegaPoly shifted_hankel_binomial_form(std::size_t n, const OmegaPoly& alpha,
                                       const OmegaPoly& beta) {
  const OmegaPoly base = alpha + beta * OmegaPoly::omega();
  const OmegaPoly beta_sq = beta * beta;
  OmegaPoly sum;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    BigInt c = binomial(static_cast<long>(n - k), static_cast<long>(k));
    if (k % 2 == 1) c = -c;
    OmegaPoly term = pow(beta_sq, static_cast<unsigned>(k)) * c;
    sum.add_product(term, pow(base, static_cast<unsigned>(n - 2 * k)));
  }
  return sum;
}

OmegaPoly second_hankel_closed(std::size_t n) {
  OmegaPoly sum;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    BigInt c = binomial(static_cast<long>(n - k), static_cast<long>(k));
    if (k % 2 == 1) c = -c;
    sum += OmegaPoly::monomial(c, n - 2 * k);
  }
  return sum;
}

OmegaPoly third_hankel_closed(std::size_t n) {
  OmegaPoly sum = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    const OmegaPoly d = second_hankel_closed(m);
    sum.add_product(d, d);
  }
  return sum;
}

OmegaPoly hankel_closed(const HankelSpec& spec) {
  switch (spec.shift) {
    case 0: return shifted_hankel_closed(spec.n, spec.alpha, spec.beta);
    case 1:
    case 2:
      if (spec.alpha != OmegaPoly(1) || !spec.beta.is_zero()) {
        throw InvalidArgument("shifted Hankel closed forms need alpha = 1, beta = 0");
      }
      return spec.shift == 1 ? second_hankel_closed(spec.n) : third_hankel_closed(spec.n);
    default: throw InvalidArgument("Hankel shift must be 0, 1 or 2");
  }
}

CheckReport hankel_recursion_check(std::size_t n) {
  if (n < 1) throw InvalidArgument("Hankel dimension must be >= 1");
  CheckReport report{"Hankel recursion n=" + std::to_string(n)};
  auto det = [](int shift, std::size_t dim) {
    if (dim == 0) return OmegaPoly(1);
    return det_fraction_free(hankel_matrix({shift, 1, 0, dim}));
  };
  const OmegaPoly lhs = det(2, n);
  const OmegaPoly second = det(1, n);
  OmegaPoly rhs = det(2, n - 1);
  rhs.add_product(second, second);
  report.compare(lhs, rhs, "n=" + std::to_string(n));
  return report;
}

}  // namespace latpath
