#pragma once

#include <cstdint>
#include <vector>

#include "lsape/assignment.hpp"
#include "lsape/edit_cost_matrix.hpp"
#include "lsape/generate.hpp"

namespace test {

template <typename T>
lsape::EditCostMatrix<T> matrix(int n, int m, std::vector<T> values) {
  return lsape::EditCostMatrix<T>(n, m, std::move(values));
}

inline lsape::EditCostMatrix<std::int64_t> imatrix(
    int n, int m, std::vector<std::int64_t> values) {
  return matrix<std::int64_t>(n, m, std::move(values));
}

// 4x5 worked instance used across the preprocessing and solver fixtures.
inline lsape::EditCostMatrix<std::int64_t> fixture_4x5() {
  return imatrix(4, 5,
                 {7, 11, 9, 8, 9, 10,  //
                  2, 8,  8, 5, 7, 3,   //
                  1, 7,  6, 6, 9, 5,   //
                  3, 7,  6, 2, 2, 3,   //
                  4, 2,  2, 7, 8, 0});
}

// Random complete assignment between sets of size n and m.
inline lsape::EpsilonAssignment random_assignment(int n, int m,
                                                  lsape::SplitMix64& rng) {
  lsape::EpsilonAssignment a;
  a.rho.assign(n, m + 1);
  a.varrho.assign(m, n + 1);
  std::vector<int> columns(m);
  for (int j = 0; j < m; ++j) columns[j] = j + 1;
  int available = m;
  for (int i = 1; i <= n; ++i) {
    if (available == 0 || rng.next() % 2 == 0) continue;  // removal
    const int pick = static_cast<int>(rng.next() % available);
    const int j = columns[pick];
    columns[pick] = columns[--available];
    a.rho[i - 1] = j;
    a.varrho[j - 1] = i;
  }
  return a;
}

inline lsape::EditCostMatrix<std::int64_t> random_int_instance(
    int n, int m, std::uint64_t seed, std::int64_t hi = 10) {
  lsape::GeneratorSpec spec;
  spec.family = lsape::Family::UniformRandom;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.lo = 0;
  spec.hi = static_cast<double>(hi);
  return lsape::generate_int(spec);
}

inline lsape::EditCostMatrix<double> random_real_instance(int n, int m,
                                                          std::uint64_t seed) {
  lsape::GeneratorSpec spec;
  spec.family = lsape::Family::UniformRandom;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  return lsape::generate(spec);
}

}  // namespace test
