#include "lsape/assignment.hpp"

#include <stdexcept>
#include <string>

namespace lsape {

AssignmentMatrix to_matrix(const EpsilonAssignment& a, int n, int m) {
  if (validate_assignment(a, n, m) == Validity::Invalid)
    throw std::invalid_argument("cannot convert an invalid assignment");
  AssignmentMatrix out;
  out.n = n;
  out.m = m;
  out.x.assign(static_cast<std::size_t>(n + 1) * (m + 1), 0);
  for (int i = 1; i <= n; ++i)
    if (a.rho_of(i) != 0) out.at(i, a.rho_of(i)) = 1;
  for (int j = 1; j <= m; ++j)
    if (a.varrho_of(j) == n + 1) out.at(n + 1, j) = 1;
  out.at(n + 1, m + 1) = 1;
  return out;
}

EpsilonAssignment from_matrix(const AssignmentMatrix& x) {
  const int n = x.n;
  const int m = x.m;
  if (x.x.size() != static_cast<std::size_t>(n + 1) * (m + 1))
    throw std::invalid_argument("assignment matrix shape mismatch");
  for (std::uint8_t v : x.x)
    if (v > 1) throw std::invalid_argument("assignment matrix must be binary");
  if (x.at(n + 1, m + 1) != 1)
    throw std::invalid_argument("corner entry (n+1, m+1) must be 1");

  EpsilonAssignment a;
  a.rho.assign(n, 0);
  a.varrho.assign(m, 0);
  for (int i = 1; i <= n; ++i) {
    int sum = 0;
    for (int j = 1; j <= m + 1; ++j) {
      if (!x.at(i, j)) continue;
      ++sum;
      a.rho[i - 1] = j;
    }
    if (sum > 1)
      throw std::invalid_argument("row " + std::to_string(i) + " sums to " +
                                  std::to_string(sum));
  }
  for (int j = 1; j <= m; ++j) {
    int sum = 0;
    for (int i = 1; i <= n + 1; ++i) {
      if (!x.at(i, j)) continue;
      ++sum;
      a.varrho[j - 1] = i;
    }
    if (sum > 1)
      throw std::invalid_argument("column " + std::to_string(j) + " sums to " +
                                  std::to_string(sum));
  }
  return a;
}

}  // namespace lsape
