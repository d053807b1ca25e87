#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcchroma/partitions.hpp"

namespace bcchroma {

// Words with distinct integer letters stand in for permutations of an
// arbitrary finite alphabet.  Pattern containment and the Bruhat order
// only see the relative order of letters, so they are implemented on raw
// words and reused both for ordinary permutations and for the windows of
// nonzero integers that planar networks are drawn on.

inline bool contains_pattern(const std::vector<int>& word,
                             const std::vector<int>& pattern) {
  const size_t n = word.size(), k = pattern.size();
  if (k > n) return false;
  // Positions of pattern values in increasing order of value.
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pattern[a] < pattern[b]; });
  std::vector<int> rank(k);
  for (size_t i = 0; i < k; ++i) rank[order[i]] = static_cast<int>(i);
  // Backtracking over subsequences; word sizes here are tiny.
  std::vector<int> chosen;
  auto rec = [&](auto&& self, size_t start) -> bool {
    size_t got = chosen.size();
    if (got == k) return true;
    for (size_t i = start; i + (k - got) <= n; ++i) {
      bool ok = true;
      for (size_t j = 0; j < got && ok; ++j) {
        bool need_less = rank[j] > rank[got];
        if (need_less ? !(word[i] < word[chosen[j]])
                      : !(word[i] > word[chosen[j]]))
          ok = false;
      }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool avoids_pattern(const std::vector<int>& word,
                           const std::vector<int>& pattern) {
  return !contains_pattern(word, pattern);
}

inline int word_inversions(const std::vector<int>& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

// Tableau criterion for the Bruhat order on rearrangements of a common
// letter set: sort every suffix increasingly; u <= w iff each sorted
// suffix of u dominates the corresponding sorted suffix of w entrywise.
inline bool bruhat_leq_words(const std::vector<int>& u,
                             const std::vector<int>& w) {
  assert(u.size() == w.size());
  const size_t n = u.size();
  std::vector<int> su, sw;
  for (size_t i = 0; i < n; ++i) {
    su.assign(u.begin() + i, u.end());
    sw.assign(w.begin() + i, w.end());
    std::sort(su.begin(), su.end());
    std::sort(sw.begin(), sw.end());
    for (size_t j = 0; j < su.size(); ++j)
      if (su[j] < sw[j]) return false;
  }
  return true;
}

// Positions (0-based) where the letter is a running maximum.
inline std::vector<int> record_positions(const std::vector<int>& w) {
  std::vector<int> recs;
  int best = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (i == 0 || w[i] > best) {
      recs.push_back(static_cast<int>(i));
      best = w[i];
    } else {
      best = std::max(best, w[i]);
    }
  return recs;
}

// A permutation of {1,...,m} in one line notation.  Composition follows
// the convention (u*v)(i) = v(u(i)), matching left-to-right products of
// generator words.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<int> seen(w_.size() + 1, 0);
    for (int x : w_) {
      if (x < 1 || x > static_cast<int>(w_.size()) || seen[x]++)
        throw std::invalid_argument("not a permutation word");
    }
  }
  static Perm identity(int m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& word() const { return w_; }

  Perm operator*(const Perm& v) const {
    assert(size() == v.size());
    std::vector<int> r(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) r[i] = v.w_[w_[i] - 1];
    return Perm(std::move(r));
  }
  Perm inverse() const {
    std::vector<int> r(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) r[w_[i] - 1] = static_cast<int>(i) + 1;
    return Perm(std::move(r));
  }

  int length() const { return word_inversions(w_); }

  bool operator==(const Perm& o) const { return w_ == o.w_; }
  bool operator!=(const Perm& o) const { return w_ != o.w_; }
  bool operator<(const Perm& o) const { return w_ < o.w_; }

 private:
  std::vector<int> w_;
};

// The permutation reversing the block [a,b] inside {1,...,m}.
inline Perm reversal_perm(int m, int a, int b) {
  assert(1 <= a && a <= b && b <= m);
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  for (int i = a; i <= b; ++i) w[i - 1] = a + b - i;
  return Perm(std::move(w));
}

inline bool bruhat_leq(const Perm& u, const Perm& w) {
  return bruhat_leq_words(u.word(), w.word());
}

inline Partition cycle_type(const Perm& p) {
  const int m = p.size();
  std::vector<bool> used(m + 1, false);
  Partition type;
  for (int i = 1; i <= m; ++i) {
    if (used[i]) continue;
    int len = 0, j = i;
    while (!used[j]) {
      used[j] = true;
      j = p(j);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

inline std::vector<Perm> all_permutations(int m) {
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline bool avoids_312(const std::vector<int>& word) {
  return avoids_pattern(word, {3, 1, 2});
}

// Smoothness pattern pair; a permutation word passes iff it avoids both.
inline bool avoids_3412_and_4231(const std::vector<int>& word) {
  return avoids_pattern(word, {3, 4, 1, 2}) &&
         avoids_pattern(word, {4, 2, 3, 1});
}

}  // namespace bcchroma
