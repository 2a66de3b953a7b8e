#pragma once

#include <functional>
#include <string>
#include <vector>

#include "latpath/omega_poly.hpp"

namespace latpath {

/// One transcribed table cell. For path tables (row, col) is (x, height);
/// for matrices it is (row, column).
struct PrintedCell {
  int row = 0;
  int col = 0;
  std::string printed;
};

/// A published table, cell for cell, together with the oracle that should
/// reproduce it.
struct ReferenceTable {
  std::string id;
  std::string caption;
  /// Printed constants are values at w = 1 (cells containing w stay symbolic).
  bool unit_weight = false;
  std::vector<PrintedCell> cells;
  std::function<OmegaPoly(int, int)> oracle;
};

const std::vector<ReferenceTable>& reference_tables();

}  // namespace latpath
