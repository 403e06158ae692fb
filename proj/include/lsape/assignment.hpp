#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lsape/edit_cost_matrix.hpp"

namespace lsape {

// Primal solution of the assignment-with-edition problem, encoded as a pair
// of vectors. rho has one entry per source element: rho[i-1] = j assigns
// u_i to v_j when j <= m, to the null element (removal) when j = m+1, and
// marks u_i unassigned when 0. varrho is the symmetric encoding for the
// target set, with n+1 meaning "inserted" and 0 meaning unassigned.
struct EpsilonAssignment {
  std::vector<int> rho;     // length n, values in {0, 1, ..., m+1}
  std::vector<int> varrho;  // length m, values in {0, 1, ..., n+1}

  int rho_of(int i) const { return rho[static_cast<std::size_t>(i) - 1]; }
  int varrho_of(int j) const { return varrho[static_cast<std::size_t>(j) - 1]; }

  bool operator==(const EpsilonAssignment& other) const = default;
};

enum class Validity { Complete, Partial, Invalid };

// Binary matrix form of an (optionally partial) epsilon-assignment; the
// corner entry (n+1, m+1) is always 1.
struct AssignmentMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::uint8_t> x;  // row-major, (n+1) x (m+1)

  std::uint8_t& at(int i, int j) {
    return x[static_cast<std::size_t>(i - 1) * (m + 1) + (j - 1)];
  }
  std::uint8_t at(int i, int j) const {
    return x[static_cast<std::size_t>(i - 1) * (m + 1) + (j - 1)];
  }
};

// Classifies the vector pair: Complete when every element of both sets is
// assigned, Partial when unassigned entries remain, Invalid on range or
// mutual-consistency violations (rho says i->j but varrho disagrees).
inline Validity validate_assignment(const EpsilonAssignment& a, int n, int m) {
  if (static_cast<int>(a.rho.size()) != n ||
      static_cast<int>(a.varrho.size()) != m)
    return Validity::Invalid;
  bool partial = false;
  for (int i = 1; i <= n; ++i) {
    const int j = a.rho_of(i);
    if (j < 0 || j > m + 1) return Validity::Invalid;
    if (j == 0) partial = true;
    if (j >= 1 && j <= m && a.varrho_of(j) != i) return Validity::Invalid;
  }
  for (int j = 1; j <= m; ++j) {
    const int i = a.varrho_of(j);
    if (i < 0 || i > n + 1) return Validity::Invalid;
    if (i == 0) partial = true;
    if (i >= 1 && i <= n && a.rho_of(i) != j) return Validity::Invalid;
  }
  return partial ? Validity::Partial : Validity::Complete;
}

// Total edit cost of a complete assignment: substitutions plus removals
// (both read through rho) plus insertions. The null-to-null pairing
// contributes nothing.
template <typename T>
T assignment_cost(const EpsilonAssignment& a, const EditCostMatrix<T>& c) {
  if (validate_assignment(a, c.n(), c.m()) != Validity::Complete)
    throw std::invalid_argument("assignment_cost requires a complete assignment");
  T total{0};
  for (int i = 1; i <= c.n(); ++i) total += c.at(i, a.rho_of(i));
  for (int j = 1; j <= c.m(); ++j)
    if (a.varrho_of(j) == c.n() + 1) total += c.at(c.n() + 1, j);
  return total;
}

// Cost of a partial assignment (unassigned elements contribute nothing).
template <typename T>
T partial_assignment_cost(const EpsilonAssignment& a,
                          const EditCostMatrix<T>& c) {
  if (validate_assignment(a, c.n(), c.m()) == Validity::Invalid)
    throw std::invalid_argument("invalid assignment");
  T total{0};
  for (int i = 1; i <= c.n(); ++i)
    if (a.rho_of(i) != 0) total += c.at(i, a.rho_of(i));
  for (int j = 1; j <= c.m(); ++j)
    if (a.varrho_of(j) == c.n() + 1) total += c.at(c.n() + 1, j);
  return total;
}

AssignmentMatrix to_matrix(const EpsilonAssignment& a, int n, int m);
EpsilonAssignment from_matrix(const AssignmentMatrix& x);

}  // namespace lsape
