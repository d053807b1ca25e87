#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcchroma/arith.hpp"

namespace bcchroma {

// A partition is stored as a weakly decreasing vector of positive parts.
// The empty partition is the empty vector.
using Partition = std::vector<int>;

// Pair (lambda, mu); used to index both conjugacy classes of the
// hyperoctahedral group and the bases of the two-alphabet symmetric
// function spaces.
using Bipartition = std::pair<Partition, Partition>;

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() >= 1;
}

inline int partition_sum(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline int num_parts(const Partition& p) { return static_cast<int>(p.size()); }

// Canonical order on the partitions of n: descending lexicographic, so
// (n) comes first and (1,...,1) last.  Every table indexed by partitions
// in this library uses this order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline int partition_index(const Partition& p, int n) {
  const auto all = partitions_of(n);
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end()) throw std::invalid_argument("not a partition of n");
  return static_cast<int>(it - all.begin());
}

inline Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  t.resize(p[0]);
  for (int j = 0; j < p[0]; ++j) {
    int cnt = 0;
    for (int part : p)
      if (part > j) ++cnt;
    t[j] = cnt;
  }
  return t;
}

// z_lambda = prod_i i^{m_i} m_i!  (the centralizer order of a permutation
// of cycle type lambda in the symmetric group).
inline Int z_partition(const Partition& p) {
  Int z = 1;
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  for (auto [part, m] : mult) z *= int_pow(part, m) * factorial(m);
  return z;
}

// Canonical order on bipartitions of n: |lambda| descending from n to 0,
// then lambda, then mu, each in the canonical partition order.
inline std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& lam : partitions_of(k))
      for (const auto& mu : partitions_of(n - k)) out.emplace_back(lam, mu);
  return out;
}

inline int bipartition_index(const Bipartition& bp, int n) {
  const auto all = bipartitions_of(n);
  auto it = std::find(all.begin(), all.end(), bp);
  if (it == all.end()) throw std::invalid_argument("not a bipartition of n");
  return static_cast<int>(it - all.begin());
}

inline std::string partition_to_string(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

inline std::string bipartition_to_string(const Bipartition& bp) {
  return partition_to_string(bp.first) + "|" + partition_to_string(bp.second);
}

// All k-element subsets of {0,...,m-1}, as sorted index vectors.
inline std::vector<std::vector<int>> subsets_of_size(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Ordered set partitions of the given ground set into blocks whose sizes
// are shape[0], shape[1], ... in that order.  Blocks come out sorted.
inline std::vector<std::vector<std::vector<int>>> ordered_set_partitions(
    const std::vector<int>& ground, const std::vector<int>& shape) {
  std::vector<std::vector<std::vector<int>>> out;
  int total = 0;
  for (int s : shape) total += s;
  if (total != static_cast<int>(ground.size())) return out;
  std::vector<std::vector<int>> cur;
  std::vector<int> rest = ground;
  auto rec = [&](auto&& self, size_t bi) -> void {
    if (bi == shape.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& idxs : subsets_of_size(static_cast<int>(rest.size()),
                                            shape[bi])) {
      std::vector<int> block, next;
      size_t t = 0;
      for (size_t i = 0; i < rest.size(); ++i) {
        if (t < idxs.size() && static_cast<int>(i) == idxs[t]) {
          block.push_back(rest[i]);
          ++t;
        } else {
          next.push_back(rest[i]);
        }
      }
      cur.push_back(block);
      std::vector<int> saved = std::move(rest);
      rest = std::move(next);
      self(self, bi + 1);
      rest = std::move(saved);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace bcchroma
