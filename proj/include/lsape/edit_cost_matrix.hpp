#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace lsape {

// Dense (n+1) x (m+1) edit cost matrix between a source set of n elements
// and a target set of m elements. Row n+1 holds insertion costs, column
// m+1 holds removal costs, and the corner (n+1, m+1) is fixed to zero.
// All accessors are 1-based, matching the usual assignment-problem
// conventions used throughout this library.
template <typename T>
class EditCostMatrix {
  static_assert(std::is_arithmetic_v<T>, "cost type must be numeric");

 public:
  EditCostMatrix() : n_(0), m_(0), costs_(1, T{0}) {}

  EditCostMatrix(int n, int m, std::vector<T> costs)
      : n_(n), m_(m), costs_(std::move(costs)) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative set size");
    const std::size_t expected =
        static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m + 1);
    if (costs_.size() != expected)
      throw std::invalid_argument("cost matrix has " +
                                  std::to_string(costs_.size()) +
                                  " entries, expected " +
                                  std::to_string(expected));
    for (const T& c : costs_) {
      if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite cost");
      }
      if (c < T{0}) throw std::invalid_argument("negative cost");
    }
    if (costs_.back() != T{0})
      throw std::invalid_argument("corner cost (n+1, m+1) must be zero");
  }

  // Zero matrix of the given shape.
  static EditCostMatrix zeros(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative set size");
    EditCostMatrix c;
    c.n_ = n;
    c.m_ = m;
    c.costs_.assign(static_cast<std::size_t>(n + 1) * (m + 1), T{0});
    return c;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int rows() const { return n_ + 1; }
  int cols() const { return m_ + 1; }

  // 1-based access; i in [1, n+1], j in [1, m+1].
  const T& at(int i, int j) const {
    return costs_[static_cast<std::size_t>(i - 1) * (m_ + 1) + (j - 1)];
  }

  T removal(int i) const { return at(i, m_ + 1); }
  T insertion(int j) const { return at(n_ + 1, j); }

  const std::vector<T>& data() const { return costs_; }

  EditCostMatrix transposed() const {
    std::vector<T> t(costs_.size());
    for (int i = 1; i <= n_ + 1; ++i)
      for (int j = 1; j <= m_ + 1; ++j)
        t[static_cast<std::size_t>(j - 1) * (n_ + 1) + (i - 1)] = at(i, j);
    EditCostMatrix out;
    out.n_ = m_;
    out.m_ = n_;
    out.costs_ = std::move(t);
    return out;
  }

  bool operator==(const EditCostMatrix& other) const = default;

 private:
  int n_;
  int m_;
  std::vector<T> costs_;  // row-major
};

}  // namespace lsape
