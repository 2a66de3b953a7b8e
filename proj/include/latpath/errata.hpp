#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace latpath {

struct ErrataEntry {
  std::string table;
  std::string caption;
  int row = 0;
  int col = 0;
  std::string printed;
  std::string oracle;
};

struct ErrataReport {
  std::size_t tables = 0;
  std::size_t cells = 0;
  std::vector<ErrataEntry> entries;
};

/// Compares every transcribed cell with its oracle and lists the mismatches.
ErrataReport compute_errata();

/// Finds the entry for (table, row, col), or nullptr.
const ErrataEntry* find_erratum(const ErrataReport& report, const std::string& table, int row,
                                int col);

std::string format_errata(const ErrataReport& report);

}  // namespace latpath
