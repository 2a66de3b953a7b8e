#pragma once

#include <cstddef>
#include <vector>

#include "latpath/check_report.hpp"
#include "latpath/omega_poly.hpp"

namespace latpath {

/// Dense n x n matrix over Z[w].
struct SquareMatrix {
  std::vector<std::vector<OmegaPoly>> entries;

  explicit SquareMatrix(std::size_t n = 0)
      : entries(n, std::vector<OmegaPoly>(n)) {}
  static SquareMatrix from_rows(std::vector<std::vector<OmegaPoly>> rows);

  std::size_t size() const { return entries.size(); }
  const OmegaPoly& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  OmegaPoly& operator()(std::size_t i, std::size_t j) { return entries[i][j]; }
};

/// Entry (i, j) = alpha * M_{i+j+shift} + beta * M_{i+j+shift+1}.
struct HankelSpec {
  int shift = 0;  // 0, 1 or 2
  OmegaPoly alpha = 1;
  OmegaPoly beta = 0;
  std::size_t n = 1;
};

/// Determinant by fraction-free (Bareiss) elimination over Z[w]. A zero pivot
/// is replaced by a lower row with a nonzero entry and the sign flipped; an
/// all-zero pivot column gives 0. The empty matrix has determinant 1.
OmegaPoly det_fraction_free(const SquareMatrix& m);

/// Laplace expansion along the first row. Second opinion for small matrices;
/// throws InvalidArgument above dimension 8.
OmegaPoly det_cofactor(const SquareMatrix& m);

SquareMatrix hankel_matrix(const HankelSpec& spec);

/// sum_{i=0}^{n} (-beta)^(n-i) alpha^i m_{n,i}.
OmegaPoly shifted_hankel_closed(std::size_t n, const OmegaPoly& alpha, const OmegaPoly& beta);

/// sum_k C(n-k, k) (-1)^k beta^(2k) (alpha + beta w)^(n-2k).
OmegaPoly shifted_hankel_binomial_form(std::size_t n, const OmegaPoly& alpha,
                                       const OmegaPoly& beta);

/// det(M_{i+j+1}) = sum_k C(n-k, k) (-1)^k w^(n-2k).
OmegaPoly second_hankel_closed(std::size_t n);

/// det(M_{i+j+2}) from 1 + sum_{m=1}^{n} det(M_{i+j+1})_m^2, the unrolled recursion.
OmegaPoly third_hankel_closed(std::size_t n);

/// Closed-form value matching hankel_matrix(spec): the alpha/beta sum for
/// shift 0, and the shift-1 / shift-2 forms with (alpha, beta) = (1, 0).
OmegaPoly hankel_closed(const HankelSpec& spec);

/// |M_{i+j+2}|_n = |M_{i+j+2}|_{n-1} + |M_{i+j+1}|_n^2 with determinants by elimination.
CheckReport hankel_recursion_check(std::size_t n);

}  // namespace latpath
