#include "latpath/tri_matrix.hpp"

#include <stdexcept>
#include <string>

#include "latpath/errors.hpp"
#include "latpath/kernels.hpp"

namespace latpath {

namespace {

const OmegaPoly& zero_poly() {
  static const OmegaPoly z;
  return z;
}

}  // namespace

TriMatrix::TriMatrix(std::size_t n) : rows_(n) {
  for (std::size_t i = 0; i < n; ++i) rows_[i].resize(i + 1);
}

TriMatrix TriMatrix::identity(std::size_t n) {
  TriMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
  return m;
}

const OmegaPoly& TriMatrix::operator()(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  return j < r.size() ? r[j] : zero_poly();
}

void TriMatrix::set(std::size_t i, std::size_t j, OmegaPoly v) {
  if (j > i) {
    throw IndexOutOfTriangle("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") lies above the diagonal");
  }
  rows_.at(i)[j] = std::move(v);
}

bool TriMatrix::has_unit_diagonal() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][i] != OmegaPoly(1)) return false;
  }
  return true;
}

TriMatrix TriMatrix::eval_omega(const BigInt& x) const {
  TriMatrix m(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.rows_[i][j] = rows_[i][j].eval(x);
  }
  return m;
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
  return kernels::parallel::tri_product(a, b);
}

TriMatrix unit_lower_inverse(const TriMatrix& m) {
  return kernels::parallel::unit_lower_inverse(m);
}

}  // namespace latpath
