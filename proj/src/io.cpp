#include "lsape/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace lsape {

namespace {
// next line that is neither blank nor a '#' comment
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}
}  // namespace

EditCostMatrix<double> read_matrix(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line))
    throw std::runtime_error("missing size header");
  int n = -1, m = -1;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra))
      throw std::runtime_error("malformed size header: " + line);
  }
  if (n < 0 || m < 0) throw std::runtime_error("negative set size");

  std::vector<double> costs;
  costs.reserve(static_cast<std::size_t>(n + 1) * (m + 1));
  for (int i = 0; i <= n; ++i) {
    if (!next_data_line(in, line))
      throw std::runtime_error("unexpected end of matrix at row " +
                               std::to_string(i + 1));
    std::istringstream row(line);
    double value{};
    int count = 0;
    while (row >> value) {
      costs.push_back(value);
      ++count;
    }
    if (count != m + 1)
      throw std::runtime_error("row " + std::to_string(i + 1) + " has " +
                               std::to_string(count) + " values, expected " +
                               std::to_string(m + 1));
  }
  if (costs.back() != 0.0)
    throw std::runtime_error("corner value (n+1, m+1) must be 0");
  try {
    return EditCostMatrix<double>(n, m, std::move(costs));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

EditCostMatrix<double> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_matrix(in);
}

}  // namespace lsape
