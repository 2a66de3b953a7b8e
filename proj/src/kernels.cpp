#include "latpath/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "latpath/errors.hpp"

namespace latpath::kernels {

namespace {

// Below these sizes the OpenMP fork/join costs more than the work.
constexpr std::size_t kMinParallelConvolve = 24;
constexpr std::size_t kMinParallelHeights = 32;
constexpr std::size_t kMinParallelRows = 12;

void check_same_size(std::span<const OmegaPoly> prev, std::span<const OmegaPoly> back,
                     std::span<OmegaPoly> out) {
  if (prev.size() != out.size() || (!back.empty() && back.size() != out.size())) {
    throw InvalidArgument("path_step: column sizes differ");
  }
}

OmegaPoly convolve_at(std::span<const OmegaPoly> a, std::span<const OmegaPoly> b,
                      std::size_t n) {
  OmegaPoly acc;
  if (a.empty() || b.empty()) return acc;
  const std::size_t lo = n >= b.size() ? n - b.size() + 1 : 0;
  const std::size_t hi = std::min(n, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) acc.add_product(a[i], b[n - i]);
  return acc;
}

OmegaPoly path_cell(std::span<const OmegaPoly> prev, std::span<const OmegaPoly> back,
                    std::size_t h) {
  OmegaPoly v;
  if (h > 0) v += prev[h - 1];
  if (h + 1 < prev.size()) v += prev[h + 1];
  if (!back.empty()) v += back[h].shifted(1);
  return v;
}

OmegaPoly tri_product_at(const TriMatrix& a, const TriMatrix& b, std::size_t i,
                         std::size_t j) {
  OmegaPoly acc;
  for (std::size_t k = j; k <= i; ++k) acc.add_product(a(i, k), b(k, j));
  return acc;
}

void check_unit(const TriMatrix& m) {
  if (!m.has_unit_diagonal()) {
    throw InvalidArgument("unit_lower_inverse: diagonal entries must all be 1");
  }
}

// Column j of the inverse: x[i] = -sum_{k=j}^{i-1} m(i,k) x[k].
void inverse_column(const TriMatrix& m, TriMatrix& inv, std::size_t j) {
  inv.set(j, j, 1);
  for (std::size_t i = j + 1; i < m.size(); ++i) {
    OmegaPoly acc;
    for (std::size_t k = j; k < i; ++k) acc.add_product(m(i, k), inv(k, j));
    inv.set(i, j, -acc);
  }
}

OmegaPoly bareiss_cell(const Grid& a, std::size_t k, std::size_t i, std::size_t j,
                       const OmegaPoly& prev_pivot) {
  OmegaPoly v = a[i][j] * a[k][k];
  v -= a[i][k] * a[k][j];
  return exact_div(v, prev_pivot);
}

}  // namespace

namespace serial {

void convolve(std::span<const OmegaPoly> a, std::span<const OmegaPoly> b,
              std::span<OmegaPoly> out) {
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = convolve_at(a, b, n);
}

void path_step(std::span<const OmegaPoly> prev, std::span<const OmegaPoly> back,
               std::span<OmegaPoly> out) {
  check_same_size(prev, back, out);
  for (std::size_t h = 0; h < out.size(); ++h) out[h] = path_cell(prev, back, h);
}

TriMatrix tri_product(const TriMatrix& a, const TriMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("tri_product: size mismatch");
  TriMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, tri_product_at(a, b, i, j));
  }
  return c;
}

TriMatrix unit_lower_inverse(const TriMatrix& m) {
  check_unit(m);
  TriMatrix inv(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) inverse_column(m, inv, j);
  return inv;
}

void bareiss_step(Grid& a, std::size_t k, const OmegaPoly& prev_pivot) {
  const std::size_t n = a.size();
  for (std::size_t i = k + 1; i < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) a[i][j] = bareiss_cell(a, k, i, j, prev_pivot);
  }
}

}  // namespace serial

namespace parallel {

void convolve(std::span<const OmegaPoly> a, std::span<const OmegaPoly> b,
              std::span<OmegaPoly> out) {
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 4) if (out.size() >= kMinParallelConvolve)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = convolve_at(a, b, static_cast<std::size_t>(i));
  }
}

void path_step(std::span<const OmegaPoly> prev, std::span<const OmegaPoly> back,
               std::span<OmegaPoly> out) {
  check_same_size(prev, back, out);
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static) if (out.size() >= kMinParallelHeights)
  for (long h = 0; h < n; ++h) {
    out[static_cast<std::size_t>(h)] = path_cell(prev, back, static_cast<std::size_t>(h));
  }
}

TriMatrix tri_product(const TriMatrix& a, const TriMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("tri_product: size mismatch");
  TriMatrix c(a.size());
  const auto n = static_cast<long>(a.size());
#pragma omp parallel for schedule(dynamic, 1) if (a.size() >= kMinParallelRows)
  for (long i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j <= row; ++j) c.row(row)[j] = tri_product_at(a, b, row, j);
  }
  return c;
}

TriMatrix unit_lower_inverse(const TriMatrix& m) {
  check_unit(m);
  TriMatrix inv(m.size());
  const auto n = static_cast<long>(m.size());
  // Columns are independent; each thread writes only its own column.
#pragma omp parallel for schedule(dynamic, 1) if (m.size() >= kMinParallelRows)
  for (long j = 0; j < n; ++j) inverse_column(m, inv, static_cast<std::size_t>(j));
  return inv;
}

void bareiss_step(Grid& a, std::size_t k, const OmegaPoly& prev_pivot) {
  const auto n = static_cast<long>(a.size());
  std::atomic<bool> inexact{false};
  // Row k and column k are read-only during the step; rows i > k are disjoint.
#pragma omp parallel for schedule(dynamic, 1) if (a.size() - k >= kMinParallelRows)
  for (long i = static_cast<long>(k) + 1; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    std::vector<OmegaPoly> updated(a.size());
    try {
      for (std::size_t j = k + 1; j < a.size(); ++j) {
        updated[j] = bareiss_cell(a, k, row, j, prev_pivot);
      }
    } catch (const InexactDivision&) {
      inexact = true;
      continue;
    }
    for (std::size_t j = k + 1; j < a.size(); ++j) a[row][j] = std::move(updated[j]);
  }
  if (inexact) {
    throw InexactDivision("fraction-free elimination step " + std::to_string(k) +
                          " produced a non-exact quotient");
  }
}

}  // namespace parallel

}  // namespace latpath::kernels
