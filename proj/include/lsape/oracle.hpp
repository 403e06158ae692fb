#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsape/assignment.hpp"
#include "lsape/edit_cost_matrix.hpp"

namespace lsape {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultEnumerationLimit = 12;

// Walks every complete epsilon-assignment between sets of size n and m
// exactly once: subsets of the source set in lexicographic order (by size,
// then indices), and for each subset every injection into the target set in
// lexicographic image order. Unsubstituted elements are removed/inserted.
class EnumerationCursor {
 public:
  EnumerationCursor(int n, int m,
                    int size_limit = kDefaultEnumerationLimit);

  // False once the enumeration is exhausted.
  bool done() const { return done_; }
  void advance();
  EpsilonAssignment current() const;

  const std::vector<int>& subset() const { return subset_; }
  const std::vector<int>& injection() const { return injection_; }

 private:
  bool next_injection();
  bool next_subset();

  int n_;
  int m_;
  std::vector<int> subset_;     // ascending source indices, size p
  std::vector<int> injection_;  // distinct target indices, size p
  bool done_ = false;
};

// Number of epsilon-assignments: sum over p of C(n,p) * C(m,p) * p!.
BigInt count_assignments(int n, int m);

template <typename Fn>
void for_each_assignment(int n, int m, Fn&& fn,
                         int size_limit = kDefaultEnumerationLimit) {
  for (EnumerationCursor cur(n, m, size_limit); !cur.done(); cur.advance())
    fn(cur.current());
}

// Exhaustive ground-truth optimum; ties resolved by enumeration order.
template <typename T>
std::pair<EpsilonAssignment, T> brute_force_optimum(
    const EditCostMatrix<T>& c, int size_limit = kDefaultEnumerationLimit) {
  EpsilonAssignment best;
  T best_cost{0};
  bool first = true;
  for_each_assignment(
      c.n(), c.m(),
      [&](const EpsilonAssignment& a) {
        const T cost = assignment_cost(a, c);
        if (first || cost < best_cost) {
          best = a;
          best_cost = cost;
          first = false;
        }
      },
      size_limit);
  return {std::move(best), best_cost};
}

}  // namespace lsape
