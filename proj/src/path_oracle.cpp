#include "latpath/path_oracle.hpp"

#include <span>
#include <string>

#include "latpath/errors.hpp"
#include "latpath/kernels.hpp"

namespace latpath {

namespace {

const OmegaPoly& zero_poly() {
  static const OmegaPoly z;
  return z;
}

void validate(const PathSpec& spec) {
  if (spec.step < 1) throw InvalidArgument("horizontal step length must be >= 1");
  if (spec.mode == PathMode::banded && spec.band < 1) {
    throw InvalidArgument("band height must be >= 1");
  }
}

void check_band(const PathSpec& spec, int height) {
  if (spec.mode == PathMode::banded && (height < 0 || height >= spec.band)) {
    throw BandViolation("height " + std::to_string(height) + " outside band [0, " +
                        std::to_string(spec.band) + ")");
  }
}

}  // namespace

CountTable::CountTable(const PathSpec& spec, int max_x) : spec_(spec), max_x_(max_x) {
  validate(spec);
  if (max_x < 0) throw InvalidArgument("path length must be >= 0");
  switch (spec.mode) {
    case PathMode::grand:
      min_h_ = -max_x;
      max_h_ = max_x;
      break;
    case PathMode::quadrant:
      min_h_ = 0;
      max_h_ = max_x;
      break;
    case PathMode::banded:
      min_h_ = 0;
      max_h_ = spec.band - 1;
      break;
  }
  const auto heights = static_cast<std::size_t>(max_h_ - min_h_ + 1);
  columns_.assign(static_cast<std::size_t>(max_x) + 1, std::vector<OmegaPoly>(heights));
  columns_[0][static_cast<std::size_t>(-min_h_)] = 1;
  for (int x = 1; x <= max_x; ++x) {
    std::span<const OmegaPoly> back;
    if (x >= spec.step) back = columns_[static_cast<std::size_t>(x - spec.step)];
    kernels::parallel::path_step(columns_[static_cast<std::size_t>(x - 1)], back,
                                 columns_[static_cast<std::size_t>(x)]);
  }
}

const OmegaPoly& CountTable::at(int x, int height) const {
  if (x < 0 || x > max_x_ || height < min_h_ || height > max_h_) return zero_poly();
  return columns_[static_cast<std::size_t>(x)][static_cast<std::size_t>(height - min_h_)];
}

OmegaPoly count_paths(const PathSpec& spec, int x, int height) {
  validate(spec);
  check_band(spec, height);
  if (x < 0) throw InvalidArgument("path length must be >= 0");
  return CountTable(spec, x).at(x, height);
}

TSeries oracle_series(const PathSpec& spec, int height, long order) {
  validate(spec);
  check_band(spec, height);
  if (order < 0) throw InvalidArgument("series order must be >= 0");
  const CountTable table(spec, static_cast<int>(order));
  std::vector<OmegaPoly> c;
  c.reserve(static_cast<std::size_t>(order) + 1);
  for (int x = 0; x <= order; ++x) c.push_back(table.at(x, height));
  return TSeries(std::move(c), order);
}

TSeries compressed_oracle_series(const PathSpec& spec, int height, long order) {
  validate(spec);
  if (spec.step != 2 || spec.mode == PathMode::grand) {
    throw InvalidArgument("compression needs a quadrant or banded spec with step 2");
  }
  check_band(spec, height);
  if (order < 0) throw InvalidArgument("series order must be >= 0");
  if (height < 0) return TSeries(order);
  const CountTable table(spec, static_cast<int>(2 * order));
  std::vector<OmegaPoly> c;
  for (long n = 0; n <= order; ++n) {
    c.push_back(table.at(static_cast<int>(2 * n - height), height));
  }
  return TSeries(std::move(c), order);
}

OmegaPoly compress_schroder(int row, int col) {
  if (col < 0 || col > row) {
    throw IndexOutOfTriangle("compressed Schroeder entry (" + std::to_string(row) + ", " +
                             std::to_string(col) + ") outside the triangle");
  }
  return count_paths(PathSpec::quadrant(2), 2 * row - col, col);
}

}  // namespace latpath
