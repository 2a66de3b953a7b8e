#include "latpath/errata.hpp"

#include <sstream>

#include "latpath/reference_tables.hpp"

namespace latpath {

ErrataReport compute_errata() {
  ErrataReport report;
  for (const ReferenceTable& table : reference_tables()) {
    ++report.tables;
    for (const PrintedCell& cell : table.cells) {
      ++report.cells;
      const OmegaPoly printed = OmegaPoly::parse(cell.printed);
      OmegaPoly oracle = table.oracle(cell.row, cell.col);
      const bool symbolic = cell.printed.find('w') != std::string::npos;
      if (table.unit_weight && !symbolic) oracle = OmegaPoly(oracle.eval(1));
      if (printed != oracle) {
        report.entries.push_back(
            {table.id, table.caption, cell.row, cell.col, cell.printed, oracle.to_string()});
      }
    }
  }
  return report;
}

const ErrataEntry* find_erratum(const ErrataReport& report, const std::string& table, int row,
                                int col) {
  for (const ErrataEntry& e : report.entries) {
    if (e.table == table && e.row == row && e.col == col) return &e;
  }
  return nullptr;
}

std::string format_errata(const ErrataReport& report) {
  std::ostringstream out;
  out << "checked " << report.cells << " printed cells in " << report.tables << " tables, "
      << report.entries.size() << " disagree with the path oracle\n";
  for (const ErrataEntry& e : report.entries) {
    out << e.table << " (" << e.row << "," << e.col << "): printed " << e.printed
        << ", oracle " << e.oracle << "  [" << e.caption << "]\n";
  }
  return out.str();
}

}  // namespace latpath
