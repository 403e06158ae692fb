#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsape/edit_cost_matrix.hpp"

namespace lsape {

// splitmix64: tiny, portable, well-studied 64-bit generator; the exact
// sequence is part of the instance-file contract so matrices reproduce
// bit-identically across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform double in [0, 1), 53-bit resolution
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class Family { UniformRandom, Product, FlippedProduct };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct GeneratorSpec {
  Family family = Family::UniformRandom;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  double lo = 0.0;   // value range, uniform-random family only
  double hi = 10.0;  // reals draw from [lo, hi); integers from {lo, ..., hi}
};

namespace detail {

template <typename T>
T uniform_draw(SplitMix64& rng, double lo, double hi) {
  if constexpr (std::is_floating_point_v<T>) {
    T v = static_cast<T>(lo + rng.next_unit() * (hi - lo));
    if (v >= hi && hi > lo) v = static_cast<T>(lo);  // keep draws in [lo, hi)
    return v;
  } else {
    const double span = hi - lo + 1.0;
    return static_cast<T>(lo) +
           static_cast<T>(rng.next_unit() * span);
  }
}

template <typename T>
EditCostMatrix<T> generate_impl(const GeneratorSpec& spec) {
  const int n = spec.n;
  const int m = spec.m;
  if (n < 0 || m < 0) throw std::invalid_argument("negative set size");
  if (spec.lo < 0 || spec.hi < spec.lo)
    throw std::invalid_argument("invalid value range");
  std::vector<T> costs(static_cast<std::size_t>(n + 1) * (m + 1), T{0});
  auto cell = [&](int i, int j) -> T& {
    return costs[static_cast<std::size_t>(i - 1) * (m + 1) + (j - 1)];
  };
  switch (spec.family) {
    case Family::UniformRandom: {
      SplitMix64 rng(spec.seed);
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= m + 1; ++j) {
          if (i == n + 1 && j == m + 1) continue;
          cell(i, j) = uniform_draw<T>(rng, spec.lo, spec.hi);
        }
      break;
    }
    case Family::Product: {
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= m + 1; ++j)
          cell(i, j) = static_cast<T>(i) * static_cast<T>(j);
      cell(n + 1, m + 1) = T{0};
      break;
    }
    case Family::FlippedProduct: {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
          cell(n - i + 1, m - j + 1) = static_cast<T>(i) * static_cast<T>(j);
      // the null row copies row n, the null column copies column m
      if (n > 0)
        for (int j = 1; j <= m; ++j) cell(n + 1, j) = cell(n, j);
      if (m > 0)
        for (int i = 1; i <= n; ++i) cell(i, m + 1) = cell(i, m);
      break;
    }
  }
  return EditCostMatrix<T>(n, m, std::move(costs));
}

}  // namespace detail

inline EditCostMatrix<double> generate(const GeneratorSpec& spec) {
  return detail::generate_impl<double>(spec);
}

inline EditCostMatrix<std::int64_t> generate_int(const GeneratorSpec& spec) {
  return detail::generate_impl<std::int64_t>(spec);
}

}  // namespace lsape
