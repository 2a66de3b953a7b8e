#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latpath/omega_poly.hpp"
#include "latpath/tpoly.hpp"

namespace latpath {

/// Power series in t known through t^order inclusive.
///
/// Binary operations on series of orders N1 and N2 give order min(N1, N2).
class TSeries {
 public:
  /// Zero series of the given order.
  explicit TSeries(long order = 0);
  /// Coefficients past `order` are dropped; missing ones are zero.
  TSeries(std::vector<OmegaPoly> coeffs, long order);
  TSeries(const TPoly& p, long order);

  static TSeries one(long order) { return TSeries(TPoly(1), order); }

  long order() const { return order_; }
  std::span<const OmegaPoly> coeffs() const { return coeffs_; }
  /// Throws std::out_of_range past the truncation order.
  const OmegaPoly& operator[](long n) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries operator-() const;
  TSeries& operator*=(const OmegaPoly& c);

  TSeries truncated(long order) const;
  /// Multiplication by t^k at the same order.
  TSeries shifted(std::size_t k) const;
  TSeries eval_omega(const BigInt& x) const;

  bool operator==(const TSeries& o) const = default;

  std::string to_string() const;

 private:
  long order_;
  std::vector<OmegaPoly> coeffs_;
};

TSeries operator+(TSeries a, const TSeries& b);
TSeries operator-(TSeries a, const TSeries& b);
TSeries operator*(TSeries a, const OmegaPoly& c);
/// Cauchy product truncated at the smaller order.
TSeries series_mul(const TSeries& a, const TSeries& b);
inline TSeries operator*(const TSeries& a, const TSeries& b) { return series_mul(a, b); }
TSeries pow(const TSeries& base, unsigned exp);

/// Multiplicative inverse; the constant term must be the OmegaPoly 1 or -1.
TSeries series_inv(const TSeries& a);

/// num(t) / den(t) for polynomials over Z[w], den(0) = +-1.
struct RationalGF {
  TPoly num;
  TPoly den;

  RationalGF eval_omega(const BigInt& x) const {
    return {num.eval_omega(x), den.eval_omega(x)};
  }
  bool operator==(const RationalGF&) const = default;
};

/// Expansion of r through t^order; throws NonUnitConstant if den(0) != +-1.
TSeries series_from_rational(const RationalGF& r, long order);

/// Finitely many negative powers of t followed by a truncated series.
/// The leading stored coefficient is nonzero unless the series is zero.
class LaurentSeries {
 public:
  /// Zero series valid through t^order.
  explicit LaurentSeries(long order = 0);
  LaurentSeries(long min_exp, std::vector<OmegaPoly> coeffs, long order);
  /// t^shift * s.
  static LaurentSeries from_series(const TSeries& s, long shift);

  long min_exp() const { return min_exp_; }
  long order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const OmegaPoly> coeffs() const { return coeffs_; }
  /// Zero below min_exp; std::out_of_range past order.
  OmegaPoly operator[](long e) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  bool operator==(const LaurentSeries& o) const = default;

  std::string to_string() const;

 private:
  void normalize();
  long min_exp_ = 0;
  std::vector<OmegaPoly> coeffs_;
  long order_;
};

LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b);

struct LaurentSplit {
  LaurentSeries principal;  // exponents < 0
  TSeries regular;          // exponents >= 0
};

/// Splits x into its principal and regular parts; requires x.order() >= 0.
LaurentSplit laurent_split(const LaurentSeries& x);

}  // namespace latpath
