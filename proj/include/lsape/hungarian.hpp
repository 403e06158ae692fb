#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsape/assignment.hpp"
#include "lsape/duals.hpp"
#include "lsape/edit_cost_matrix.hpp"

namespace lsape {

struct SolveStats {
  int augmentations = 0;
  int dual_updates = 0;
  int zero_delta_updates = 0;
};

struct SolveOptions {
  bool preprocess = true;
};

template <typename T>
struct SolveResult {
  EpsilonAssignment assignment;
  DualVariables<T> duals;
  T objective{0};
  SolveStats stats;
};

namespace detail {

template <typename T>
constexpr T big() {
  if constexpr (std::is_floating_point_v<T>)
    return std::numeric_limits<T>::infinity();
  else
    return std::numeric_limits<T>::max() / 4;
}

template <typename T>
struct DirectView {
  const EditCostMatrix<T>* c;
  int rows() const { return c->n(); }
  int cols() const { return c->m(); }
  T at(int i, int j) const { return c->at(i, j); }
};

template <typename T>
struct TransposedView {
  const EditCostMatrix<T>* c;
  int rows() const { return c->m(); }
  int cols() const { return c->n(); }
  T at(int i, int j) const { return c->at(j, i); }
};

}  // namespace detail

// Scratch state of one augmenting-path search. The three row sets of the
// search (tree rows SU, frontier LU\SU, untouched rows) live in one
// permutation of the rows, split at two advancing boundaries; the frontier
// is consumed in enqueue (FIFO) order by just moving the first boundary.
template <typename T>
struct AlternatingTree {
  std::vector<T> pi;      // best reduced cost from any tree column, per row
  std::vector<int> pred;  // tree predecessor column of each row
  std::vector<int> perm;  // rows partitioned [SU | LU\SU | rest]
  std::vector<int> pos;   // position of each row inside perm
  int su_end = 0;
  int lu_end = 0;
  std::vector<int> sv;    // tree columns in insertion order; a column can
                          // only enter once, each arrives via a distinct row

  void reset(int n_rows) {
    pi.assign(n_rows, detail::big<T>());
    pred.assign(n_rows, 0);
    perm.resize(n_rows);
    pos.resize(n_rows);
    for (int i = 0; i < n_rows; ++i) perm[i] = i + 1, pos[i] = i;
    su_end = lu_end = 0;
    sv.clear();
  }

  bool in_lu(int i) const { return pos[i - 1] < lu_end; }

  void add_to_lu(int i) {
    const int p = pos[i - 1];
    const int q = lu_end++;
    std::swap(perm[p], perm[q]);
    pos[perm[p] - 1] = p;
    pos[perm[q] - 1] = q;
  }

  bool frontier_empty() const { return su_end == lu_end; }

  // earliest enqueued frontier row; it already sits at the boundary
  int pop_frontier() { return perm[su_end++]; }

  void add_to_sv(int j) { sv.push_back(j); }
};

namespace detail {

template <bool WithEpsilon>
inline bool row_is_sink(int rho_i, int n_cols) {
  if constexpr (WithEpsilon)
    return rho_i == 0 || rho_i == n_cols + 1;
  else
    return rho_i == 0;
}

// Grows the tree of minimal alternating paths rooted at the unassigned
// column k until a sink is reached, updating duals on the way so the
// complementary slackness condition is kept. Returns (sink row, 0) when the
// path ends in an unassigned or removed row, and (rows+1, column) when it
// ends in the null row through a zero reduced insertion cost. Rows are
// scanned in ascending index order; frontier rows are consumed FIFO.
template <typename T, bool WithEpsilon, typename Cost>
std::pair<int, int> augment_engine(int k, const Cost& c,
                                   const std::vector<int>& rho,
                                   const std::vector<int>& varrho,
                                   std::vector<T>& u, std::vector<T>& v,
                                   AlternatingTree<T>& tree,
                                   SolveStats* stats) {
  const int n_rows = c.rows();
  const int n_cols = c.cols();
  tree.reset(n_rows);
  int j = k;
  for (;;) {
    tree.add_to_sv(j);
    if constexpr (WithEpsilon) {
      // null row reachable right away: the column is not already fed by it
      // and its reduced insertion cost is zero
      if (varrho[j - 1] <= n_rows && c.at(n_rows + 1, j) - v[j - 1] == T{0})
        return {n_rows + 1, j};
    }
    for (int i = 1; i <= n_rows; ++i) {
      if (tree.in_lu(i)) continue;
      const T reduced = c.at(i, j) - u[i - 1] - v[j - 1];
      if (reduced < tree.pi[i - 1]) {
        tree.pred[i - 1] = j;
        tree.pi[i - 1] = reduced;
        if (reduced == T{0}) {
          if (row_is_sink<WithEpsilon>(rho[i - 1], n_cols)) return {i, 0};
          tree.add_to_lu(i);
        }
      }
    }
    if (tree.frontier_empty()) {
      T delta_s = big<T>();
      for (int t = tree.lu_end; t < n_rows; ++t)
        delta_s = std::min(delta_s, tree.pi[tree.perm[t] - 1]);
      T delta = delta_s;
      T delta_eps = big<T>();
      int l = 0;
      if constexpr (WithEpsilon) {
        for (int jj : tree.sv) {
          const T r = c.at(n_rows + 1, jj) - v[jj - 1];
          if (r < delta_eps || (r == delta_eps && jj < l)) {
            delta_eps = r;
            l = jj;
          }
        }
        delta = std::min(delta_s, delta_eps);
      } else {
        if (delta_s == big<T>())
          throw std::logic_error("no augmenting path in square instance");
      }
      for (int jj : tree.sv) v[jj - 1] += delta;
      for (int t = 0; t < tree.lu_end; ++t) u[tree.perm[t] - 1] -= delta;
      if (stats) {
        ++stats->dual_updates;
        if (delta == T{0}) ++stats->zero_delta_updates;
      }
      if constexpr (WithEpsilon) {
        if (delta_eps <= delta_s) return {n_rows + 1, l};
      }
      for (int i = 1; i <= n_rows; ++i) {
        if (tree.in_lu(i)) continue;
        tree.pi[i - 1] -= delta;
        if (tree.pi[i - 1] == T{0}) {
          if (row_is_sink<WithEpsilon>(rho[i - 1], n_cols)) return {i, 0};
          tree.add_to_lu(i);
        }
      }
    }
    const int i = tree.pop_frontier();
    j = rho[i - 1];
  }
}

// Swaps assigned and unassigned edges along the found path, walking the
// predecessor chain back from the sink to the root column k.
inline void swap_along_path(int sink_i, int sink_j,
                            const std::vector<int>& pred,
                            std::vector<int>& rho, std::vector<int>& varrho,
                            int k, int n_rows) {
  int i, j;
  if (sink_i == n_rows + 1) {
    j = sink_j;
    const int r = varrho[j - 1];
    varrho[j - 1] = sink_i;
    i = r;
  } else {
    i = sink_i;
    j = 0;
  }
  int steps = 0;
  while (j != k) {
    if (i < 1 || i > n_rows || ++steps > n_rows + 1)
      throw std::logic_error("malformed predecessor chain");
    j = pred[i - 1];
    rho[i - 1] = j;
    const int r = varrho[j - 1];
    varrho[j - 1] = i;
    i = r;
  }
}

// Row minima feed u, column minima of the reduced matrix feed v, then a
// greedy scanline picks a partial assignment over zero reduced costs,
// followed by removal and insertion sweeps. Complementary slackness holds
// on the result.
template <typename T>
void preprocess_into(const EditCostMatrix<T>& c, std::vector<int>& rho,
                     std::vector<int>& varrho, std::vector<T>& u,
                     std::vector<T>& v) {
  const int n = c.n();
  const int m = c.m();
  rho.assign(n, 0);
  varrho.assign(m, 0);
  u.assign(n + 1, T{0});
  v.assign(m + 1, T{0});
  for (int i = 1; i <= n; ++i) {
    T mn = c.at(i, 1);
    for (int j = 2; j <= m + 1; ++j) mn = std::min(mn, c.at(i, j));
    u[i - 1] = mn;
  }
  for (int j = 1; j <= m; ++j) {
    T mn = c.at(1, j) - u[0];
    for (int i = 2; i <= n + 1; ++i) mn = std::min(mn, c.at(i, j) - u[i - 1]);
    v[j - 1] = mn;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (varrho[j - 1] == 0 && c.at(i, j) == u[i - 1] + v[j - 1]) {
        rho[i - 1] = j;
        varrho[j - 1] = i;
        break;
      }
    }
    if (rho[i - 1] == 0 && c.at(i, m + 1) == u[i - 1]) rho[i - 1] = m + 1;
  }
  for (int j = 1; j <= m; ++j)
    if (varrho[j - 1] == 0 && c.at(n + 1, j) == v[j - 1])
      varrho[j - 1] = n + 1;
}

}  // namespace detail

template <typename T>
std::pair<EpsilonAssignment, DualVariables<T>> preprocess(
    const EditCostMatrix<T>& c) {
  EpsilonAssignment a;
  DualVariables<T> d;
  detail::preprocess_into(c, a.rho, a.varrho, d.u, d.v);
  return {std::move(a), std::move(d)};
}

template <typename T>
struct AugmentOutcome {
  int sink_i = 0;  // row index, or rows+1 for the null row
  int sink_j = 0;  // closing column when the sink is the null row, else 0
  DualVariables<T> duals;
  std::vector<int> pred;
};

// One augmenting-path search rooted at the unassigned column k of the given
// partial assignment. Inputs must satisfy complementary slackness; the
// returned duals satisfy it as well. Pass transpose=true to root the search
// at an element of the source set instead (rho/varrho and u/v roles swap).
template <typename T>
AugmentOutcome<T> augment(int k, const EditCostMatrix<T>& c,
                          const EpsilonAssignment& a,
                          const DualVariables<T>& duals,
                          bool transpose = false, SolveStats* stats = nullptr) {
  check_dual_shape(duals, c);
  if (validate_assignment(a, c.n(), c.m()) == Validity::Invalid)
    throw std::invalid_argument("invalid partial assignment");
  AugmentOutcome<T> out;
  out.duals = duals;
  AlternatingTree<T> tree;
  if (!transpose) {
    if (k < 1 || k > c.m() || a.varrho_of(k) != 0)
      throw std::invalid_argument("augment requires an unassigned column");
    detail::DirectView<T> view{&c};
    std::tie(out.sink_i, out.sink_j) = detail::augment_engine<T, true>(
        k, view, a.rho, a.varrho, out.duals.u, out.duals.v, tree, stats);
  } else {
    if (k < 1 || k > c.n() || a.rho_of(k) != 0)
      throw std::invalid_argument("augment requires an unassigned row");
    detail::TransposedView<T> view{&c};
    std::tie(out.sink_i, out.sink_j) = detail::augment_engine<T, true>(
        k, view, a.varrho, a.rho, out.duals.v, out.duals.u, tree, stats);
  }
  out.pred = std::move(tree.pred);
  return out;
}

// Applies the path found by augment to the assignment. n_rows is the side
// the sink lives on (n for a column-rooted search, m for a row-rooted one).
inline EpsilonAssignment apply_augmenting_path(int sink_i, int sink_j,
                                               const std::vector<int>& pred,
                                               EpsilonAssignment a, int k,
                                               int n_rows,
                                               bool transpose = false) {
  if (!transpose)
    detail::swap_along_path(sink_i, sink_j, pred, a.rho, a.varrho, k, n_rows);
  else
    detail::swap_along_path(sink_i, sink_j, pred, a.varrho, a.rho, k, n_rows);
  return a;
}

// Two-phase primal-dual solve: first every unassigned target element is
// assigned by an augmenting path, then the remaining source elements get
// the symmetric treatment on the transposed costs. Scratch stays O(n+m)
// beyond the input matrix.
template <typename T>
SolveResult<T> solve(const EditCostMatrix<T>& c, const SolveOptions& opts = {}) {
  const int n = c.n();
  const int m = c.m();
  std::vector<int> rho(n, 0), varrho(m, 0);
  std::vector<T> u(n + 1, T{0}), v(m + 1, T{0});
  if (opts.preprocess) detail::preprocess_into(c, rho, varrho, u, v);

  SolveResult<T> out;
  AlternatingTree<T> tree;
  detail::DirectView<T> direct{&c};
  for (int k = 1; k <= m; ++k) {
    if (varrho[k - 1] != 0) continue;
    auto [si, sj] = detail::augment_engine<T, true>(k, direct, rho, varrho, u,
                                                    v, tree, &out.stats);
    detail::swap_along_path(si, sj, tree.pred, rho, varrho, k, n);
    ++out.stats.augmentations;
  }
  detail::TransposedView<T> transposed{&c};
  for (int k = 1; k <= n; ++k) {
    if (rho[k - 1] != 0) continue;
    auto [si, sj] = detail::augment_engine<T, true>(k, transposed, varrho, rho,
                                                    v, u, tree, &out.stats);
    detail::swap_along_path(si, sj, tree.pred, varrho, rho, k, m);
    ++out.stats.augmentations;
  }

  out.assignment = EpsilonAssignment{std::move(rho), std::move(varrho)};
  out.duals = DualVariables<T>{std::move(u), std::move(v)};
  out.objective = assignment_cost(out.assignment, c);
  return out;
}

}  // namespace lsape
