#pragma once

#include <vector>

#include "latpath/omega_poly.hpp"
#include "latpath/series.hpp"

namespace latpath {

/// Height constraint of a path family.
enum class PathMode {
  grand,     // unconstrained
  quadrant,  // y >= 0
  banded,    // 0 <= y < band
};

/// Step set {up (1,1), down (1,-1), horizontal (w,0) weighted by w-symbol}.
struct PathSpec {
  int step = 1;  // horizontal step length w >= 1
  PathMode mode = PathMode::quadrant;
  int band = 0;  // k, only for PathMode::banded

  static PathSpec grand(int step = 1) { return {step, PathMode::grand, 0}; }
  static PathSpec quadrant(int step = 1) { return {step, PathMode::quadrant, 0}; }
  static PathSpec banded(int band, int step = 1) { return {step, PathMode::banded, band}; }
};

/// Weighted path counts for every (x, height) with 0 <= x <= max_x.
///
/// Built column by column from the step recursion alone; nothing in here
/// knows about generating functions, so it is the ground truth the closed
/// forms are tested against.
class CountTable {
 public:
  CountTable(const PathSpec& spec, int max_x);

  const PathSpec& spec() const { return spec_; }
  int max_x() const { return max_x_; }
  int min_height() const { return min_h_; }
  int max_height() const { return max_h_; }

  /// Count of paths from (0,0) to (x, height); zero outside the tracked range.
  const OmegaPoly& at(int x, int height) const;

 private:
  PathSpec spec_;
  int max_x_;
  int min_h_;
  int max_h_;
  std::vector<std::vector<OmegaPoly>> columns_;
};

/// Throws BandViolation for a banded spec and height outside [0, k).
OmegaPoly count_paths(const PathSpec& spec, int x, int height);

/// sum_{x=0}^{order} count_paths(spec, x, height) t^x.
TSeries oracle_series(const PathSpec& spec, int height, long order);

/// Compressed w=2 column: coefficient of t^n is count(2n - height, height).
/// Requires spec.step == 2 and a quadrant or banded spec.
TSeries compressed_oracle_series(const PathSpec& spec, int height, long order);

/// Compressed Schroeder entry (row, col) = quadrant w=2 count at (2*row - col, col).
/// Throws IndexOutOfTriangle unless 0 <= col <= row.
OmegaPoly compress_schroder(int row, int col);

}  // namespace latpath
