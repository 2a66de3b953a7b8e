#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latpath/bigint.hpp"

namespace latpath {

/// Polynomial in the horizontal-step weight w with big-integer coefficients.
///
/// Stored densely in ascending powers and kept canonical: the highest stored
/// coefficient is nonzero, and the zero polynomial has no coefficients. Every
/// scalar in the library is one of these; numeric weights only appear through
/// eval().
class OmegaPoly {
 public:
  OmegaPoly() = default;
  OmegaPoly(int c) : OmegaPoly(BigInt(c)) {}    // NOLINT: integers embed
  OmegaPoly(long c) : OmegaPoly(BigInt(c)) {}   // NOLINT
  OmegaPoly(BigInt c);                          // NOLINT
  explicit OmegaPoly(std::vector<BigInt> coeffs);
  OmegaPoly(std::initializer_list<long> coeffs);

  /// The indeterminate w itself.
  static OmegaPoly omega();
  static OmegaPoly monomial(const BigInt& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Coefficient of w^i; zero past the degree.
  const BigInt& operator[](std::size_t i) const;

  OmegaPoly& operator+=(const OmegaPoly& o);
  OmegaPoly& operator-=(const OmegaPoly& o);
  OmegaPoly& operator*=(const OmegaPoly& o);
  OmegaPoly& operator*=(const BigInt& c);
  OmegaPoly operator-() const;

  /// this += a * b without a temporary product.
  void add_product(const OmegaPoly& a, const OmegaPoly& b);

  /// Multiplication by w^k.
  OmegaPoly shifted(std::size_t k) const;

  /// Horner evaluation at an integer weight.
  BigInt eval(const BigInt& x) const;

  bool operator==(const OmegaPoly& o) const = default;

  /// "2 + 6*w^2 + w^4"; ascending powers, zero renders as "0".
  std::string to_string() const;
  /// Inverse of to_string; also accepts compact forms like "2+6w^2+w^4".
  static OmegaPoly parse(std::string_view text);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b);
OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b);
OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b);
OmegaPoly operator*(OmegaPoly a, const BigInt& c);
OmegaPoly operator*(const BigInt& c, OmegaPoly a);

OmegaPoly pow(const OmegaPoly& base, unsigned exp);

/// Quotient a / b when b divides a in Z[w]; throws InexactDivision otherwise.
OmegaPoly exact_div(const OmegaPoly& a, const OmegaPoly& b);
/// Coefficient-wise exact division by a nonzero integer.
OmegaPoly exact_div(const OmegaPoly& a, const BigInt& d);

/// True when every coefficient of a is <= the matching coefficient of b.
bool coefficientwise_le(const OmegaPoly& a, const OmegaPoly& b);

enum class ArithKind { add, sub, mul };
OmegaPoly opoly_arith(const OmegaPoly& a, const OmegaPoly& b, ArithKind kind);

inline BigInt opoly_eval(const OmegaPoly& a, const BigInt& x) { return a.eval(x); }

}  // namespace latpath
