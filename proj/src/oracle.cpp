#include "lsape/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lsape {

EnumerationCursor::EnumerationCursor(int n, int m, int size_limit)
    : n_(n), m_(m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative set size");
  if (n + m > size_limit)
    throw std::length_error("enumeration limited to n+m <= " +
                            std::to_string(size_limit));
  // starts at p = 0: everything removed/inserted
}

EpsilonAssignment EnumerationCursor::current() const {
  if (done_) throw std::logic_error("cursor exhausted");
  EpsilonAssignment a;
  a.rho.assign(n_, m_ + 1);
  a.varrho.assign(m_, n_ + 1);
  for (std::size_t k = 0; k < subset_.size(); ++k) {
    a.rho[subset_[k] - 1] = injection_[k];
    a.varrho[injection_[k] - 1] = subset_[k];
  }
  return a;
}

void EnumerationCursor::advance() {
  if (done_) return;
  if (next_injection()) return;
  if (next_subset()) return;
  done_ = true;
}

bool EnumerationCursor::next_injection() {
  const int p = static_cast<int>(injection_.size());
  std::vector<char> used(m_ + 1, 0);
  for (int v : injection_) used[v] = 1;
  for (int pos = p - 1; pos >= 0; --pos) {
    used[injection_[pos]] = 0;
    int next = 0;
    for (int v = injection_[pos] + 1; v <= m_; ++v) {
      if (!used[v]) {
        next = v;
        break;
      }
    }
    if (next == 0) continue;
    injection_[pos] = next;
    used[next] = 1;
    // complete the tail with the smallest unused values
    for (int t = pos + 1, v = 1; t < p; ++t) {
      while (used[v]) ++v;
      injection_[t] = v;
      used[v] = 1;
    }
    return true;
  }
  return false;
}

bool EnumerationCursor::next_subset() {
  const int p = static_cast<int>(subset_.size());
  // next p-combination of {1..n} in lexicographic order
  for (int pos = p - 1; pos >= 0; --pos) {
    if (subset_[pos] < n_ - (p - 1 - pos)) {
      ++subset_[pos];
      for (int t = pos + 1; t < p; ++t) subset_[t] = subset_[t - 1] + 1;
      std::iota(injection_.begin(), injection_.end(), 1);
      return true;
    }
  }
  // move on to subsets of size p+1
  if (p >= std::min(n_, m_)) return false;
  subset_.resize(p + 1);
  injection_.resize(p + 1);
  std::iota(subset_.begin(), subset_.end(), 1);
  std::iota(injection_.begin(), injection_.end(), 1);
  return true;
}

BigInt count_assignments(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative set size");
  BigInt total = 0;
  // binomials built incrementally: C(x, p) = C(x, p-1) * (x-p+1) / p
  BigInt binom_n = 1, binom_m = 1, factorial = 1;
  total += 1;  // p = 0
  for (int p = 1; p <= std::min(n, m); ++p) {
    binom_n = binom_n * (n - p + 1) / p;
    binom_m = binom_m * (m - p + 1) / p;
    factorial *= p;
    total += binom_n * binom_m * factorial;
  }
  return total;
}

}  // namespace lsape
