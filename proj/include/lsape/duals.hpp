#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lsape/assignment.hpp"
#include "lsape/edit_cost_matrix.hpp"

namespace lsape {

// Dual solution: one value per source element plus a fixed-zero entry for
// the null element, and symmetrically for the target set.
template <typename T>
struct DualVariables {
  std::vector<T> u;  // length n+1, u[n] == 0
  std::vector<T> v;  // length m+1, v[m] == 0

  static DualVariables zeros(int n, int m) {
    return DualVariables{std::vector<T>(n + 1, T{0}),
                         std::vector<T>(m + 1, T{0})};
  }

  T u_of(int i) const { return u[static_cast<std::size_t>(i) - 1]; }
  T v_of(int j) const { return v[static_cast<std::size_t>(j) - 1]; }

  bool operator==(const DualVariables& other) const = default;
};

namespace detail {
template <typename T>
bool ge_tol(T lhs, T rhs, T tol) {
  // lhs >= rhs within absolute tolerance
  return lhs >= rhs - tol;
}
template <typename T>
bool eq_tol(T lhs, T rhs, T tol) {
  return lhs >= rhs - tol && lhs <= rhs + tol;
}
}  // namespace detail

// E(u, v): the dual objective. Null entries are zero by invariant, so the
// plain sum matches the sum restricted to real elements.
template <typename T>
T dual_objective(const DualVariables<T>& d) {
  T total{0};
  for (const T& x : d.u) total += x;
  for (const T& x : d.v) total += x;
  return total;
}

template <typename T>
void check_dual_shape(const DualVariables<T>& d, const EditCostMatrix<T>& c) {
  if (static_cast<int>(d.u.size()) != c.n() + 1 ||
      static_cast<int>(d.v.size()) != c.m() + 1)
    throw std::invalid_argument("dual vector length mismatch");
}

// u_i + v_j <= c_ij on every cell, with the null entries pinned to zero.
template <typename T>
bool dual_feasible(const DualVariables<T>& d, const EditCostMatrix<T>& c,
                   T tol = T{0}) {
  check_dual_shape(d, c);
  if (d.u.back() != T{0} || d.v.back() != T{0}) return false;
  for (int i = 1; i <= c.n() + 1; ++i)
    for (int j = 1; j <= c.m() + 1; ++j)
      if (!detail::ge_tol(c.at(i, j), d.u_of(i) + d.v_of(j), tol))
        return false;
  return true;
}

// Complementary slackness: every assigned cell has zero reduced cost and no
// cell has negative reduced cost. Holds for partial assignments too; on a
// complete assignment with feasible duals it certifies optimality.
template <typename T>
bool check_slackness(const EpsilonAssignment& a, const DualVariables<T>& d,
                     const EditCostMatrix<T>& c, T tol = T{0}) {
  check_dual_shape(d, c);
  if (validate_assignment(a, c.n(), c.m()) == Validity::Invalid)
    throw std::invalid_argument("invalid assignment");
  if (!dual_feasible(d, c, tol)) return false;
  for (int i = 1; i <= c.n(); ++i) {
    const int j = a.rho_of(i);
    if (j != 0 && !detail::eq_tol(c.at(i, j), d.u_of(i) + d.v_of(j), tol))
      return false;
  }
  for (int j = 1; j <= c.m(); ++j) {
    if (a.varrho_of(j) == c.n() + 1 &&
        !detail::eq_tol(c.at(c.n() + 1, j), d.v_of(j), tol))
      return false;
  }
  return true;
}

}  // namespace lsape
