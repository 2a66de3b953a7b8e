#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "latpath/omega_poly.hpp"

namespace latpath {

/// Polynomial in t whose coefficients are OmegaPoly; canonical like OmegaPoly.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<OmegaPoly> coeffs);
  TPoly(std::initializer_list<long> coeffs);
  TPoly(OmegaPoly c);  // NOLINT: constants embed

  static TPoly monomial(const OmegaPoly& c, std::size_t power);
  static TPoly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const OmegaPoly> coeffs() const { return coeffs_; }
  const OmegaPoly& operator[](std::size_t n) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const OmegaPoly& c);
  TPoly operator-() const;

  /// Multiplication by t^k.
  TPoly shifted(std::size_t k) const;
  /// Coefficients specialized at a numeric weight, kept as constant OmegaPolys.
  TPoly eval_omega(const BigInt& x) const;
  /// p(t) -> p(-t).
  TPoly substitute_neg_t() const;
  /// p(t^2) -> p(t); throws InvalidArgument if an odd power is present.
  TPoly compress_even() const;

  bool operator==(const TPoly& o) const = default;

  /// "[1; -3; 1]" style coefficient list in ascending powers of t.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<OmegaPoly> coeffs_;
};

TPoly operator+(TPoly a, const TPoly& b);
TPoly operator-(TPoly a, const TPoly& b);
TPoly operator*(const TPoly& a, const TPoly& b);
TPoly operator*(TPoly a, const OmegaPoly& c);
TPoly operator*(const OmegaPoly& c, TPoly a);
TPoly pow(const TPoly& base, unsigned exp);

/// num / den where den has constant term +1 or -1 and divides num exactly.
/// Throws NonUnitConstant or InexactDivision.
TPoly exact_div_unit(const TPoly& num, const TPoly& den);

inline TPoly substitute_neg_t(const TPoly& p) { return p.substitute_neg_t(); }

}  // namespace latpath
