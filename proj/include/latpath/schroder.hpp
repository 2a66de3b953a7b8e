#pragma once

#include <vector>

#include "latpath/check_report.hpp"
#include "latpath/omega_poly.hpp"
#include "latpath/series.hpp"
#include "latpath/tpoly.hpp"
#include "latpath/tri_matrix.hpp"

namespace latpath {

// Paths with horizontal steps of length w, and the compressed w = 2 case.
//
// "Compressed" Schroeder counts drop the parity zeros of the w = 2 table:
// compressed(n, j) = uncompressed(2n - j, j). In generating-function terms
// the up/down pair contributes t instead of t^2 and a horizontal step t
// instead of t^2.

/// Normalized polynomial t^n p_n(t).
struct PPoly {
  int n = 0;
  int step = 1;
  bool compressed = false;
  TPoly poly;
};

/// Row polynomial s_n(t) = sum_k s_{n,k} t^(n-k) of the inverse compressed
/// Schroeder matrix.
struct SPoly {
  int n = 0;
  TPoly poly;
};

/// Delannoy polynomial d_k(t) = sum_j D(k-j, j) t^j.
struct DPoly {
  int k = 0;
  TPoly poly;
};

/// mu_w = 1 + w t^step mu_w + t^2 mu_w^2; coefficient n is W(n, 0).
TSeries w_series(int step, long order);

/// Compressed Schroeder mu_s = 1 + w t mu_s + t mu_s^2.
TSeries compressed_schroder_series(long order);

/// sum_j C(n-j, j) (-1)^j t^(2j) (1 - w t^step)^(n-2j). Zero for n < 0.
PPoly w_p_poly(int n, int step);

/// w = 2 polynomial with t^2 -> t: sum_j C(n-j, j) (-1)^j t^j (1 - w t)^(n-2j).
PPoly w_p_poly_compressed(int n);

/// t^(-j) (mu_w P_j - P_(j-1)) before the regular part is taken.
LaurentSeries w_column_laurent(int height, int step, long order);

/// Regular part of w_column_laurent. Coefficient of t^n is W(n, height): the
/// count of quadrant paths ending at x = n (no index offset).
TSeries w_column_gf(int height, int step, long order);

/// Compressed analogue. Coefficient of t^n is compressed(n + height, height),
/// i.e. the column read from its diagonal entry downward.
TSeries compressed_column_gf(int height, long order);

/// P_(k-1) / P_k: coefficient n counts w-step paths of length n in 0 <= y < k
/// ending on the axis. Requires k >= 1.
RationalGF banded_w_gf(int k, int step);

/// Compressed w = 2 version of banded_w_gf, valid for symbolic w.
RationalGF banded_w_gf_compressed(int k);

/// Entry (i, j) = compressed(i, j), built from the Riordan columns t^j mu_s^(j+1).
TriMatrix schroder_matrix_compressed(std::size_t n);

/// Closed-form inverse entry s_{k,j}. Throws IndexOutOfTriangle for j > k and
/// InexactDivision if a term is not integral.
OmegaPoly inverse_schroder_entry(int k, int j);

/// s_n(t) from its closed-form sum over m.
SPoly inverse_schroder_poly(int n);

/// Triangular inverse of schroder_matrix_compressed(n).
TriMatrix inverse_schroder_matrix(std::size_t n);

/// D(n, k) = sum_l C(k, l) C(n + k - l, k) w^l.
OmegaPoly delannoy_number(int n, int k);

/// d_k(t) = sum_l C(k-l, l) w^l t^l (1 + t)^(k-2l).
DPoly delannoy_poly(int k);

/// D(n, n+j) = w D(n-1, n-1+j) + D(n, n+j-1) + D(n-1, n+j), 1 <= n <= horizon, 0 <= j <= horizon.
CheckReport delannoy_recursion_check(int horizon);

/// D(n, n+j) against grand w = 2 path counts at (2n + j, j), n + j <= horizon.
CheckReport delannoy_oracle_check(int horizon);

/// sum_l C(k+1, l) C(l/2, m) = (k+1)/(k-2m+1) C(k-m, m) 2^(k+1-2m), exact in Q.
/// Requires 0 <= m <= k/2.
CheckReport gould_identity_check(int k, int m);

/// Operations stated only for unit weight w = 1. All polynomials they take
/// or return have integer (constant OmegaPoly) coefficients.
namespace unit_weight {

/// t^k ((1 - t)/(1 + t))^(k+1): column k of the inverse compressed matrix.
TSeries inverse_schroder_column_gf(int k, long order);

/// d_(k-1)(-t) / d_k(-t).
RationalGF banded_schroder_gf(int k);

/// The same generating function assembled from inverse Schroeder polynomials:
/// numerator (1-t) sum_i (-1)^i t^(2i) s_(k-2-2i) + [k odd] (-1)^((k-1)/2) t^(k-1),
/// denominator likewise with k - 1 and [k even] (-1)^(k/2) t^k.
RationalGF banded_schroder_gf_via_s(int k);

/// Four polynomial identities linking s_n, d_(n-1)(-t), d_n(-t), d_(n+1)(-t)
/// and the compressed p_n. Requires n >= 1.
CheckReport delannoy_s_bridge_check(int n);

struct TheoremResult {
  CheckReport report;
  LaurentSeries principal;
  TSeries regular;
};

/// For k >= 2, splits t^(-k) S^(k)(t) s_(k-1)(t) through t^order and checks
///  (a) principal part == t^(-k) s_(k-2)(t),
///  (b) regular coefficient n == banded compressed count at (n + k - 1, k - 1),
///  (c) S^(k) s_(k-1) - s_(k-2) == t * sum_n count(n, k-1) t^n through t^(order+k).
TheoremResult theorem_schroeder_check(int k, long order);

}  // namespace unit_weight

}  // namespace latpath
