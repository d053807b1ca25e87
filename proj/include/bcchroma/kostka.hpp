#pragma once

#include <map>
#include <vector>

#include "bcchroma/partitions.hpp"

namespace bcchroma {

namespace detail {

// Subpartitions nu of lambda such that lambda/nu is a horizontal strip
// of the given size (at most one removed cell per column).
inline std::vector<Partition> horizontal_strip_predecessors(
    const Partition& lambda, int size) {
  std::vector<Partition> out;
  Partition nu(lambda.size());
  auto rec = [&](auto&& self, size_t row, int remaining) -> void {
    if (row == lambda.size()) {
      if (remaining == 0) {
        Partition trimmed = nu;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.push_back(trimmed);
      }
      return;
    }
    // The strip condition interleaves nu with lambda.
    int lo = row + 1 < lambda.size() ? lambda[row + 1] : 0;
    int hi = lambda[row];
    if (row > 0) lo = std::max(lo, 0);
    for (int v = hi; v >= lo; --v) {
      int removed = hi - v;
      if (removed > remaining) break;
      nu[row] = v;
      self(self, row + 1, remaining - removed);
    }
    nu[row] = hi;
  };
  rec(rec, 0, size);
  return out;
}

}  // namespace detail

// Kostka number: semistandard fillings of shape lambda with content mu.
// Computed by stripping the largest letter, which occupies a horizontal
// strip, and recursing.  Memoized globally; the tables involved here are
// small (n <= 12 or so) but the same entries are requested constantly.
inline Int kostka_number(const Partition& lambda, const Partition& mu) {
  if (partition_sum(lambda) != partition_sum(mu)) return 0;
  if (lambda.empty()) return 1;
  static std::map<std::pair<Partition, Partition>, Int> memo;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Partition rest(mu.begin(), mu.end() - 1);
  Int total = 0;
  for (const auto& nu : detail::horizontal_strip_predecessors(lambda, mu.back()))
    total += kostka_number(nu, rest);
  memo[key] = total;
  return total;
}

// Kostka matrix over the partitions of n in canonical order.  Since the
// canonical order refines dominance and K_{lambda,mu} vanishes unless
// lambda dominates mu, the matrix is upper unitriangular.
inline std::vector<std::vector<Int>> kostka_matrix(int n) {
  const auto parts = partitions_of(n);
  const size_t m = parts.size();
  std::vector<std::vector<Int>> K(m, std::vector<Int>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) K[i][j] = kostka_number(parts[i], parts[j]);
  return K;
}

// Exact inverse by back substitution on the unitriangular matrix.
inline std::vector<std::vector<Int>> kostka_inverse(int n) {
  const auto K = kostka_matrix(n);
  const size_t m = K.size();
  std::vector<std::vector<Int>> inv(m, std::vector<Int>(m));
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = j + 1; i-- > 0;) {
      Int v = (i == j) ? 1 : 0;
      for (size_t k = i + 1; k <= j; ++k) v -= K[i][k] * inv[k][j];
      inv[i][j] = v;  // K[i][i] == 1
    }
  }
  return inv;
}

inline Int kostka_inverse_entry(const Partition& lambda, const Partition& mu) {
  int n = partition_sum(lambda);
  if (partition_sum(mu) != n) return 0;
  static std::map<int, std::vector<std::vector<Int>>> memo;
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, kostka_inverse(n)).first;
  return it->second[partition_index(lambda, n)][partition_index(mu, n)];
}

}  // namespace bcchroma
