#include "latpath/reference_tables.hpp"

#include <memory>

#include "latpath/path_oracle.hpp"
#include "latpath/tri_matrix.hpp"

namespace latpath {

namespace {

struct Line {
  int fixed;
  int start;
  std::vector<std::string> values;
};

// Path tables are printed with heights as rows and x running left to right.
std::vector<PrintedCell> by_height(const std::vector<Line>& lines) {
  std::vector<PrintedCell> cells;
  for (const Line& l : lines) {
    for (std::size_t k = 0; k < l.values.size(); ++k) {
      cells.push_back({l.start + static_cast<int>(k), l.fixed, l.values[k]});
    }
  }
  return cells;
}

std::vector<PrintedCell> by_row(const std::vector<Line>& lines) {
  std::vector<PrintedCell> cells;
  for (const Line& l : lines) {
    for (std::size_t k = 0; k < l.values.size(); ++k) {
      cells.push_back({l.fixed, l.start + static_cast<int>(k), l.values[k]});
    }
  }
  return cells;
}

std::function<OmegaPoly(int, int)> paths(PathSpec spec) {
  return [spec](int x, int h) { return count_paths(spec, x, h); };
}

std::function<OmegaPoly(int, int)> matrix_entry(std::function<OmegaPoly(int, int)> entry,
                                                bool invert, std::size_t n) {
  auto m = std::make_shared<TriMatrix>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      m->set(i, j, entry(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  if (invert) *m = unit_lower_inverse(*m);
  return [m](int i, int j) {
    return (*m)(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };
}

std::vector<ReferenceTable> build() {
  std::vector<ReferenceTable> t;

  t.push_back({"grand-motzkin", "Grand Motzkin numbers G(n, j)", false,
               by_height({
                   {5, 5, {"1"}},
                   {4, 4, {"1", "5w"}},
                   {3, 3, {"1", "4w", "5+10w^2"}},
                   {2, 2, {"1", "3w", "4+6w^2", "20w+10w^3"}},
                   {1, 1, {"1", "2w", "3+3w^2", "12w+4w^3", "10+30w^2+5w^4"}},
                   {0, 0, {"1", "w", "2+w^2", "6w+w^3", "6+12w^2+w^4", "30w+20w^3+w^5"}},
                   {-1, 1, {"1", "2w", "3+3w^2", "12w+4w^3", "10+30w^2+5w^4"}},
                   {-2, 2, {"1", "3w", "4+6w^2", "20+10w^3"}},
                   {-3, 3, {"1", "4w", "5+10w^2"}},
                   {-4, 4, {"1", "5w"}},
                   {-5, 5, {"1"}},
               }),
               paths(PathSpec::grand(1))});

  t.push_back({"grand-riordan", "Riordan matrix G, row n, column j", false,
               by_row({
                   {0, 0, {"1"}},
                   {1, 0, {"w", "1"}},
                   {2, 0, {"2+w^2", "2w", "1"}},
                   {3, 0, {"6w+w^3", "3+3w^2", "3w", "1"}},
                   {4, 0, {"6+12w^2+w^4", "12w+4w^3", "4+6w^2", "4w"}},
                   {5, 0, {"30w+20w^3+w^5", "10+30w^2+5w^4", "20w+10w^3", "5+10w^2"}},
                   {6, 0, {"20+90w^2+30w^4+w^6", "60w+60w^3+6w^5", "15+60w^2+15w^4", "30w+20w^3"}},
               }),
               paths(PathSpec::grand(1))});

  t.push_back({"motzkin", "Motzkin numbers M(n, m)", false,
               by_height({
                   {5, 5, {"1"}},
                   {4, 4, {"1", "5w"}},
                   {3, 3, {"1", "4w", "4+10w^2"}},
                   {2, 2, {"1", "3w", "3+6w^2", "15w+10w^3"}},
                   {1, 1, {"1", "2w", "2+3w^2", "8w+4w^3", "5+20w^2+5w^4"}},
                   {0, 0, {"1", "w", "1+w^2", "3w+w^3", "2+6w^2+w^4", "10w+10w^3+w^5"}},
               }),
               paths(PathSpec::quadrant(1))});

  const std::vector<Line> motzkin_unit = {
      {0, 0, {"1"}}, {1, 0, {"1", "1"}}, {2, 0, {"2", "2", "1"}},
      {3, 0, {"4", "5", "3", "1"}}, {4, 0, {"9", "12", "9", "4", "1"}}};
  const auto motzkin_entry = [](int i, int j) { return count_paths(PathSpec::quadrant(1), i, j); };
  t.push_back({"motzkin-matrix", "Motzkin matrix at w = 1", true, by_row(motzkin_unit),
               matrix_entry(motzkin_entry, false, 5)});
  t.push_back({"motzkin-inverse", "inverse Motzkin matrix at w = 1", true,
               by_row({{0, 0, {"1"}},
                       {1, 0, {"-1", "1"}},
                       {2, 0, {"0", "-2", "1"}},
                       {3, 0, {"1", "1", "-3", "1"}},
                       {4, 0, {"-1", "2", "3", "-4", "1"}}}),
               matrix_entry(motzkin_entry, true, 5)});

  t.push_back({"motzkin-band-4", "Motzkin paths below y = 4 at w = 1", true,
               by_height({
                   {3, 3, {"1", "4", "14", "44", "133", "392", "1140"}},
                   {2, 2, {"1", "3", "9", "25", "69", "189", "518", "1422"}},
                   {1, 1, {"1", "2", "5", "12", "30", "76", "196", "512", "1353"}},
                   {0, 0, {"1", "1", "2", "4", "9", "21", "51", "127", "323", "835"}},
               }),
               paths(PathSpec::banded(4, 1))});

  t.push_back({"w3-paths", "paths with horizontal steps of length 3", false,
               by_height({
                   {8, 8, {"1", "0"}},
                   {7, 7, {"1", "0", "8"}},
                   {6, 6, {"1", "0", "7", "7w"}},
                   {5, 5, {"1", "0", "6", "6w", "27"}},
                   {4, 4, {"1", "0", "5", "5w", "20", "35w"}},
                   {3, 3, {"1", "0", "4", "4w", "14", "24w", "48+10w^2"}},
                   {2, 2, {"1", "0", "3", "3w", "9", "15w", "28+6w^2", "63w"}},
                   {1, 1, {"1", "0", "2", "2w", "5", "8w", "14+3w^2", "30w", "42+20w^2"}},
                   {0, 0, {"1", "0", "1", "w", "2", "3w", "5+w^2", "10w", "14+6w^2", "35w+w^3"}},
               }),
               paths(PathSpec::quadrant(3))});

  t.push_back({"schroder", "weighted Schroeder numbers S(n, j)", false,
               by_height({
                   {4, 4, {"1", "0", "5+5w"}},
                   {3, 3, {"1", "0", "4+4w", "0"}},
                   {2, 2, {"1", "0", "3+3w", "0", "9+15w+6w^2"}},
                   {1, 1, {"1", "0", "2+2w", "0", "5+8w+3w^2", "0"}},
                   {0, 0, {"1", "0", "1+w", "0", "2+3w+w^2", "0", "5+10w+6w^2+w^3"}},
               }),
               paths(PathSpec::quadrant(2))});

  const auto compressed_entry = [](int i, int j) { return compress_schroder(i, j); };
  t.push_back({"schroder-compressed", "compressed Schroeder matrix at w = 1", true,
               by_row({{0, 0, {"1"}},
                       {1, 0, {"2", "1"}},
                       {2, 0, {"6", "4", "1"}},
                       {3, 0, {"22", "16", "6", "1"}},
                       {4, 0, {"90", "68", "30", "8", "1"}}}),
               matrix_entry(compressed_entry, false, 5)});
  t.push_back({"schroder-inverse", "inverse compressed Schroeder matrix at w = 1", true,
               by_row({{0, 0, {"1"}},
                       {1, 0, {"-2", "1"}},
                       {2, 0, {"2", "-4", "1"}},
                       {3, 0, {"-2", "8", "-6", "1"}},
                       {4, 0, {"2", "-12", "18", "-8", "1"}}}),
               matrix_entry(compressed_entry, true, 5)});

  t.push_back({"grand-schroder", "uncompressed Grand Schroeder numbers", true,
               by_height({
                   {6, 6, {"1", "0"}},
                   {5, 5, {"1", "0", "7+6w"}},
                   {4, 4, {"1", "0", "6+5w", "0"}},
                   {3, 3, {"1", "0", "5+4w", "0", "21+30w+10w^2"}},
                   {2, 2, {"1", "0", "4+3w", "0", "15+20w+6w^2", "0"}},
                   {1, 1, {"1", "0", "3+2w", "0", "10+12w+3w^2", "0", "129"}},
                   {0, 0, {"1", "0", "2+w", "0", "6+6w+w^2", "0", "63", "0"}},
               }),
               paths(PathSpec::grand(2))});

  t.push_back({"schroder-band-4", "compressed Schroeder paths below y = 4 at w = 1", true,
               by_height({
                   {3, 3, {"1", "7", "36", "168", "756", "3353"}},
                   {2, 2, {"1", "6", "29", "132", "588", "2597", "11430"}},
                   {1, 1, {"1", "4", "16", "67", "288", "1253", "5480", "24020"}},
                   {0, 0, {"1", "2", "6", "22", "89", "377", "1630", "7110", "31130"}},
               }),
               [](int n, int h) {
                 const int x = 2 * n - h;
                 return x < 0 ? OmegaPoly() : count_paths(PathSpec::banded(4, 2), x, h);
               }});
  return t;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = build();
  return tables;
}

}  // namespace latpath
