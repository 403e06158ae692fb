#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lsape/assignment.hpp"
#include "lsape/edit_cost_matrix.hpp"

namespace lsape {

// How the large "forbidden" value of the squared formulation is picked.
// SumPlusOne exceeds the total cost of any transformation, so no optimal
// square solution can touch a forbidden cell. MaxCostPlusOne is the tight
// bound: strictly above every entry, which already makes any forbidden cell
// reroutable at a strict gain.
enum class OmegaPolicy { SumPlusOne, MaxCostPlusOne };

// The (n+m) x (n+m) square instance equivalent to an edit cost matrix:
// substitution block top-left, diagonal removal costs top-right, diagonal
// insertion costs bottom-left, zero block bottom-right, omega elsewhere.
template <typename T>
struct SLsapeInstance {
  int n = 0;
  int m = 0;
  T omega{0};
  std::vector<T> costs;  // row-major, (n+m) x (n+m)

  int size() const { return n + m; }
  const T& at(int i, int j) const {
    return costs[static_cast<std::size_t>(i - 1) * (n + m) + (j - 1)];
  }
  T& at(int i, int j) {
    return costs[static_cast<std::size_t>(i - 1) * (n + m) + (j - 1)];
  }
};

template <typename T>
SLsapeInstance<T> build_slsape(const EditCostMatrix<T>& c,
                               OmegaPolicy policy = OmegaPolicy::SumPlusOne) {
  const int n = c.n();
  const int m = c.m();
  T omega{1};
  if (policy == OmegaPolicy::SumPlusOne) {
    for (const T& v : c.data()) omega += v;
  } else {
    T max_cost{0};
    for (const T& v : c.data()) max_cost = std::max(max_cost, v);
    omega += max_cost;
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(omega)) throw std::overflow_error("omega overflow");
  }

  SLsapeInstance<T> out;
  out.n = n;
  out.m = m;
  out.omega = omega;
  out.costs.assign(static_cast<std::size_t>(n + m) * (n + m), T{0});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) out.at(i, j) = c.at(i, j);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      out.at(i, m + k) = (k == i) ? c.removal(i) : omega;
  for (int j = 1; j <= m; ++j)
    for (int l = 1; l <= m; ++l)
      out.at(n + j, l) = (l == j) ? c.insertion(j) : omega;
  return out;
}

// Complete assignment -> bijection on n+m indices. Rows 1..n map as the
// assignment does (removal of i lands on its own null column m+i); null row
// n+j maps to j when v_j is inserted. The leftover null-to-null pairs are
// completed canonically by pairing sorted indices, which makes the
// conversion deterministic.
inline std::vector<int> to_slsape_bijection(const EpsilonAssignment& a, int n,
                                            int m) {
  if (validate_assignment(a, n, m) != Validity::Complete)
    throw std::invalid_argument("bijection conversion requires a complete assignment");
  std::vector<int> p(n + m, 0);
  std::vector<int> spare_cols;  // null columns m+i for substituted rows i
  std::vector<int> spare_rows;  // null rows n+j for substituted columns j
  for (int i = 1; i <= n; ++i) {
    if (a.rho_of(i) <= m) {
      p[i - 1] = a.rho_of(i);
      spare_cols.push_back(m + i);
    } else {
      p[i - 1] = m + i;
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (a.varrho_of(j) == n + 1)
      p[n + j - 1] = j;
    else
      spare_rows.push_back(n + j);
  }
  for (std::size_t k = 0; k < spare_rows.size(); ++k)
    p[spare_rows[k] - 1] = spare_cols[k];
  return p;
}

// Inverse direction; rejects bijections that pair a real element with a
// foreign null element.
inline EpsilonAssignment from_slsape_bijection(const std::vector<int>& p,
                                               int n, int m) {
  if (static_cast<int>(p.size()) != n + m)
    throw std::invalid_argument("bijection has wrong size");
  std::vector<char> seen(n + m, 0);
  for (int t : p) {
    if (t < 1 || t > n + m || seen[t - 1])
      throw std::invalid_argument("not a bijection");
    seen[t - 1] = 1;
  }
  EpsilonAssignment a;
  a.rho.assign(n, 0);
  a.varrho.assign(m, 0);
  for (int i = 1; i <= n; ++i) {
    const int t = p[i - 1];
    if (t <= m) {
      a.rho[i - 1] = t;
      a.varrho[t - 1] = i;
    } else if (t == m + i) {
      a.rho[i - 1] = m + 1;
    } else {
      throw std::invalid_argument("bijection removes element via a foreign null column");
    }
  }
  for (int j = 1; j <= m; ++j) {
    const int t = p[n + j - 1];
    if (t <= m) {
      if (t != j)
        throw std::invalid_argument("bijection inserts element via a foreign null row");
      a.varrho[j - 1] = n + 1;
    }
    // t > m: a null-to-null pairing, cost-free and ignored
  }
  return a;
}

// Cost of a bijection on the squared instance.
template <typename T>
T slsape_cost(const std::vector<int>& p, const SLsapeInstance<T>& inst) {
  if (static_cast<int>(p.size()) != inst.size())
    throw std::invalid_argument("permutation size mismatch");
  T total{0};
  for (int i = 1; i <= inst.size(); ++i) total += inst.at(i, p[i - 1]);
  return total;
}

}  // namespace lsape
