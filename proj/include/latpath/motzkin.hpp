#pragma once

#include "latpath/check_report.hpp"
#include "latpath/omega_poly.hpp"
#include "latpath/series.hpp"
#include "latpath/tpoly.hpp"
#include "latpath/tri_matrix.hpp"

namespace latpath {

// Generating functions

/// mu(t) = 1 + w t mu + t^2 mu^2 solved coefficient by coefficient.
TSeries motzkin_series(long order);

/// Grand Motzkin g(t) = 1 / (1 - w t - 2 t^2 mu(t)).
TSeries grand_motzkin_series(long order);

/// mu^(height+1): coefficient of t^n is M(n + height, height).
TSeries motzkin_column_gf(int height, long order);

/// g (t mu)^height: coefficient of t^n is G(n, height).
TSeries grand_column_gf(int height, long order);

// Riordan matrices

/// Entry (i, j) = M(i, j), the quadrant w=1 count.
TriMatrix motzkin_matrix(std::size_t n);

/// Entry (i, j) = G(i, j) for j >= 0, the unrestricted w=1 count.
TriMatrix grand_matrix(std::size_t n);

// Closed forms

/// sum_k C(n, 2k) C_k w^(n-2k).
OmegaPoly motzkin_closed(int n);

BigInt catalan(unsigned n);

/// sum_k C(n, k) (-1)^(n-k) C_(k+1), the w = 1 Motzkin number.
BigInt motzkin_from_catalan(unsigned n);

// The inverse matrix m_{i,j}, three ways

/// Gegenbauer double-binomial sum. Throws IndexOutOfTriangle for j > i.
OmegaPoly inverse_motzkin_entry(int i, int j);

/// Three-term recurrence (i - j) m_{i,j} = -w i m_{i-1,j} - (i + j) m_{i-2,j}.
/// Throws IndexOutOfTriangle for j > i, InexactDivision if a step is not exact.
OmegaPoly inverse_motzkin_entry_rec(int i, int j);

/// Forward substitution on motzkin_matrix(n).
TriMatrix inverse_motzkin_matrix(std::size_t n);

/// m_k(t) = sum_j m_{k,j} t^(k-j) = sum_l C(k-l, l) (-1)^l t^(2l) (1 - w t)^(k-2l).
TPoly inverse_motzkin_poly(int k);

// Banded paths

struct BandedGF {
  int band = 1;
  RationalGF gf;
  int level = 0;  // ending height
};

/// m_{k-1}(t) / m_k(t); requires k >= 1.
BandedGF banded_motzkin_gf(int k);

// Identity checks; each compares against oracle-built inputs

/// Both Lemma identities at (i, j):
///   M(i,j) = sum_{k<=j} m_{j,k} M_{i+k},   m_{i,j} = sum_{k<=i-j} m_{i+1,j+1+k} M_k.
CheckReport verify_lemma(int i, int j);
/// verify_lemma over 0 <= i, j <= max_index.
CheckReport verify_lemma_range(int max_index);

/// sum_{k<=j} m_{j,k} M_{i+k} = delta_{i,j} for 0 <= i <= j <= max_index.
CheckReport verify_orthogonality(int max_index);

/// Linear recursion of the band-k sequence with coefficients m_{k,*}, n <= horizon.
CheckReport banded_motzkin_recursion_check(int k, int horizon);

/// M_{n+2} - w M_{n+1} = sum_i M_i M_{n-i} for 0 <= n <= horizon.
CheckReport first_return_check(int horizon);

/// G(n+1, j+1) = G(n,j) + w G(n,j+1) + G(n,j+2) on an n x n window; same for M.
CheckReport riordan_recurrence_check(std::size_t n);

}  // namespace latpath
