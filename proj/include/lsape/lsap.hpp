#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsape/hungarian.hpp"
#include "lsape/slsape.hpp"

namespace lsape {

// Plain N x N cost matrix for the classical assignment problem.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  SquareMatrix(int size, std::vector<T> costs)
      : size_(size), costs_(std::move(costs)) {
    if (size < 0) throw std::invalid_argument("negative size");
    if (costs_.size() != static_cast<std::size_t>(size) * size)
      throw std::invalid_argument("matrix is not square");
    for (const T& c : costs_) {
      if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite cost");
      }
      if (c < T{0}) throw std::invalid_argument("negative cost");
    }
  }

  int size() const { return size_; }
  const T& at(int i, int j) const {
    return costs_[static_cast<std::size_t>(i - 1) * size_ + (j - 1)];
  }

 private:
  int size_ = 0;
  std::vector<T> costs_;
};

template <typename T>
struct LsapResult {
  std::vector<int> perm;  // column assigned to each row, 1-based
  std::vector<T> u;
  std::vector<T> v;
  T objective{0};
  SolveStats stats;
};

namespace detail {
template <typename T>
struct SquareView {
  const SquareMatrix<T>* c;
  int rows() const { return c->size(); }
  int cols() const { return c->size(); }
  T at(int i, int j) const { return c->at(i, j); }
};
}  // namespace detail

// Classical Hungarian solver (shortest augmenting paths with dual updates).
// Same engine as the edition-aware solver, with every null-element rule
// compiled out; sinks are unassigned rows only and a single phase suffices.
template <typename T>
LsapResult<T> solve_lsap(const SquareMatrix<T>& c) {
  const int size = c.size();
  LsapResult<T> out;
  out.perm.assign(size, 0);
  out.u.assign(size, T{0});
  out.v.assign(size, T{0});
  std::vector<int> colsol(size, 0);

  for (int i = 1; i <= size; ++i) {
    T mn = c.at(i, 1);
    for (int j = 2; j <= size; ++j) mn = std::min(mn, c.at(i, j));
    out.u[i - 1] = mn;
  }
  for (int j = 1; j <= size; ++j) {
    T mn = c.at(1, j) - out.u[0];
    for (int i = 2; i <= size; ++i)
      mn = std::min(mn, c.at(i, j) - out.u[i - 1]);
    out.v[j - 1] = mn;
  }
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      if (colsol[j - 1] == 0 &&
          c.at(i, j) == out.u[i - 1] + out.v[j - 1]) {
        out.perm[i - 1] = j;
        colsol[j - 1] = i;
        break;
      }
    }
  }

  AlternatingTree<T> tree;
  detail::SquareView<T> view{&c};
  for (int k = 1; k <= size; ++k) {
    if (colsol[k - 1] != 0) continue;
    auto [si, sj] = detail::augment_engine<T, false>(
        k, view, out.perm, colsol, out.u, out.v, tree, &out.stats);
    detail::swap_along_path(si, sj, tree.pred, out.perm, colsol, k, size);
    ++out.stats.augmentations;
  }

  for (int i = 1; i <= size; ++i) out.objective += c.at(i, out.perm[i - 1]);
  return out;
}

// Baseline route: square the instance, solve it as a classical LSAP, map
// the permutation back. The duals of the reduced problem are recovered by
// folding each null row/column dual into its real partner; feasibility and
// slackness carry over because paired null cells are tight at the optimum.
template <typename T>
SolveResult<T> solve_via_slsape(const EditCostMatrix<T>& c,
                                OmegaPolicy policy = OmegaPolicy::SumPlusOne) {
  const int n = c.n();
  const int m = c.m();
  SLsapeInstance<T> inst = build_slsape(c, policy);
  LsapResult<T> lsap =
      solve_lsap(SquareMatrix<T>(inst.size(), std::move(inst.costs)));

  for (int i = 1; i <= n; ++i) {
    const int t = lsap.perm[i - 1];
    if (t > m && t != m + i)
      throw std::logic_error("optimal square solution uses a forbidden cell");
  }
  for (int j = 1; j <= m; ++j) {
    const int t = lsap.perm[n + j - 1];
    if (t <= m && t != j)
      throw std::logic_error("optimal square solution uses a forbidden cell");
  }

  SolveResult<T> out;
  out.assignment = from_slsape_bijection(lsap.perm, n, m);
  out.duals = DualVariables<T>::zeros(n, m);
  for (int i = 1; i <= n; ++i)
    out.duals.u[i - 1] = lsap.u[i - 1] + lsap.v[m + i - 1];
  for (int j = 1; j <= m; ++j)
    out.duals.v[j - 1] = lsap.v[j - 1] + lsap.u[n + j - 1];
  out.objective = assignment_cost(out.assignment, c);
  out.stats = lsap.stats;
  return out;
}

}  // namespace lsape
