#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latpath/omega_poly.hpp"

namespace latpath {

/// Square lower-triangular matrix over Z[w]. Row i stores columns 0..i.
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t n = 0);
  static TriMatrix identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }

  /// Entries above the diagonal read as zero.
  const OmegaPoly& operator()(std::size_t i, std::size_t j) const;
  /// Throws IndexOutOfTriangle for j > i.
  void set(std::size_t i, std::size_t j, OmegaPoly v);

  std::span<const OmegaPoly> row(std::size_t i) const { return rows_.at(i); }
  std::span<OmegaPoly> row(std::size_t i) { return rows_.at(i); }

  bool has_unit_diagonal() const;
  TriMatrix eval_omega(const BigInt& x) const;

  bool operator==(const TriMatrix& o) const = default;

 private:
  std::vector<std::vector<OmegaPoly>> rows_;
};

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);

/// Inverse of a unit lower-triangular matrix by forward substitution.
/// Throws InvalidArgument when a diagonal entry is not 1.
TriMatrix unit_lower_inverse(const TriMatrix& m);

}  // namespace latpath
