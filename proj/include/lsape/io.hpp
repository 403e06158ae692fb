#pragma once

#include <iosfwd>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "lsape/edit_cost_matrix.hpp"

namespace lsape {

// Instance text format: optional '#' comment lines, a "n m" header line,
// then n+1 rows of m+1 whitespace-separated decimal values. The corner
// value must be 0.
EditCostMatrix<double> read_matrix(std::istream& in);
EditCostMatrix<double> read_matrix_file(const std::string& path);

template <typename T>
void write_matrix(std::ostream& out, const EditCostMatrix<T>& c,
                  const std::vector<std::string>& comments = {}) {
  const auto old_precision = out.precision();
  if constexpr (std::is_floating_point_v<T>)
    out.precision(std::numeric_limits<T>::max_digits10);  // exact round trip
  for (const std::string& line : comments) out << "# " << line << '\n';
  out << c.n() << ' ' << c.m() << '\n';
  for (int i = 1; i <= c.n() + 1; ++i) {
    for (int j = 1; j <= c.m() + 1; ++j) {
      if (j > 1) out << ' ';
      out << c.at(i, j);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace lsape
