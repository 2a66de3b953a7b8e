#pragma once

// Data-parallel inner loops of the library.
//
// Each kernel exists twice with the same signature: `serial` is the plain
// reference loop kept for testing, `parallel` distributes the independent
// outputs with OpenMP. The rest of the library calls `parallel`; tests check
// that both produce identical results and bench/ compares their speed.

#include <cstddef>
#include <span>
#include <vector>

#include "latpath/omega_poly.hpp"
#include "latpath/tri_matrix.hpp"

namespace latpath::kernels {

using Grid = std::vector<std::vector<OmegaPoly>>;

namespace serial {

/// out[n] = sum_{i} a[i] * b[n - i] for n < out.size().
void convolve(std::span<const OmegaPoly> a, std::span<const OmegaPoly> b,
              std::span<OmegaPoly> out);

/// One column of the path DP:
/// out[h] = prev[h-1] + prev[h+1] + w * back[h], out-of-range reads are zero.
/// `back` is the column one horizontal step earlier, empty when none exists.
void path_step(std::span<const OmegaPoly> prev, std::span<const OmegaPoly> back,
               std::span<OmegaPoly> out);

TriMatrix tri_product(const TriMatrix& a, const TriMatrix& b);

/// Forward substitution for a unit lower-triangular matrix.
TriMatrix unit_lower_inverse(const TriMatrix& m);

/// One fraction-free elimination step on rows/columns past `k`:
/// a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot.
/// Throws InexactDivision if a quotient is not exact.
void bareiss_step(Grid& a, std::size_t k, const OmegaPoly& prev_pivot);

}  // namespace serial

namespace parallel {

void convolve(std::span<const OmegaPoly> a, std::span<const OmegaPoly> b,
              std::span<OmegaPoly> out);
void path_step(std::span<const OmegaPoly> prev, std::span<const OmegaPoly> back,
               std::span<OmegaPoly> out);
TriMatrix tri_product(const TriMatrix& a, const TriMatrix& b);
TriMatrix unit_lower_inverse(const TriMatrix& m);
void bareiss_step(Grid& a, std::size_t k, const OmegaPoly& prev_pivot);

}  // namespace parallel

}  // namespace latpath::kernels
