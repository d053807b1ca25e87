#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcchroma/partitions.hpp"
#include "bcchroma/permutation.hpp"

namespace bcchroma {

// Element of the hyperoctahedral group B_n, stored as the short one line
// word (w(1),...,w(n)) with signed entries.  The action on negative
// indices is forced by symmetry: w(-i) = -w(i).  Composition matches the
// convention used for Perm: (u*v)(i) = v(u(i)).
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> short_word) : w_(std::move(short_word)) {
    std::vector<int> seen(w_.size() + 1, 0);
    for (int x : w_) {
      int a = std::abs(x);
      if (a < 1 || a > static_cast<int>(w_.size()) || seen[a]++)
        throw std::invalid_argument("not a signed permutation word");
    }
  }
  static SignedPerm identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
  }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const {
    assert(i != 0 && std::abs(i) <= n());
    return i > 0 ? w_[i - 1] : -w_[-i - 1];
  }
  const std::vector<int>& word() const { return w_; }

  // Images of (-n, ..., -1, 1, ..., n), in that order.
  std::vector<int> long_word() const {
    std::vector<int> lw;
    lw.reserve(2 * w_.size());
    for (int i = n(); i >= 1; --i) lw.push_back(-w_[i - 1]);
    for (int i = 1; i <= n(); ++i) lw.push_back(w_[i - 1]);
    return lw;
  }

  SignedPerm operator*(const SignedPerm& v) const {
    assert(n() == v.n());
    std::vector<int> r(w_.size());
    for (int i = 1; i <= n(); ++i) r[i - 1] = v(w_[i - 1]);
    return SignedPerm(std::move(r));
  }
  SignedPerm inverse() const {
    std::vector<int> r(w_.size());
    for (int i = 1; i <= n(); ++i) {
      int img = w_[i - 1];
      if (img > 0)
        r[img - 1] = i;
      else
        r[-img - 1] = -i;
    }
    return SignedPerm(std::move(r));
  }

  bool operator==(const SignedPerm& o) const { return w_ == o.w_; }
  bool operator!=(const SignedPerm& o) const { return w_ != o.w_; }
  bool operator<(const SignedPerm& o) const { return w_ < o.w_; }

 private:
  std::vector<int> w_;
};

// Coxeter length: inversions of the short word plus the absolute values
// of its negative letters.
inline int bn_length(const SignedPerm& w) {
  int l = word_inversions(w.word());
  for (int x : w.word())
    if (x < 0) l += -x;
  return l;
}

// Number of sign changes; the reflection length contribution of the
// special generator.
inline int bn_neg_count(const SignedPerm& w) {
  int c = 0;
  for (int x : w.word())
    if (x < 0) ++c;
  return c;
}

inline int bn_length_s(const SignedPerm& w) {
  return bn_length(w) - bn_neg_count(w);
}

// Bruhat order on B_n via the flagged tableau criterion on short word
// suffixes, the signed analogue of the sorted suffix test.
inline bool bn_bruhat_leq(const SignedPerm& u, const SignedPerm& w) {
  assert(u.n() == w.n());
  return bruhat_leq_words(u.word(), w.word());
}

// Reversal of the positive block [a,b] together with its mirror image.
inline SignedPerm bn_reversal(int n, int a, int b) {
  assert(1 <= a && a <= b && b <= n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int i = a; i <= b; ++i) w[i - 1] = a + b - i;
  return SignedPerm(std::move(w));
}

// Reversal of the symmetric block from -a to a, i.e. i -> -i for |i| <= a.
inline SignedPerm bn_symmetric_reversal(int n, int a) {
  assert(1 <= a && a <= n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int i = 1; i <= a; ++i) w[i - 1] = -i;
  return SignedPerm(std::move(w));
}

inline SignedPerm bn_t_generator(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  w[0] = -1;
  return SignedPerm(std::move(w));
}

inline SignedPerm bn_s_generator(int n, int i) {
  assert(1 <= i && i < n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return SignedPerm(std::move(w));
}

inline std::vector<SignedPerm> all_signed_permutations(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) w[i] = -w[i];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Underlying permutation of absolute values.
inline Perm bn_abs(const SignedPerm& w) {
  std::vector<int> a(w.n());
  for (int i = 1; i <= w.n(); ++i) a[i - 1] = std::abs(w(i));
  return Perm(std::move(a));
}

// Signed cycle type: cycles of the absolute value permutation, split by
// the parity of the number of negative letters met along the cycle.
// Even cycles land in the first partition, odd ones in the second.
inline Bipartition signed_cycle_type(const SignedPerm& w) {
  const int n = w.n();
  std::vector<bool> used(n + 1, false);
  Partition pos, neg;
  for (int i = 1; i <= n; ++i) {
    if (used[i]) continue;
    int len = 0, negs = 0, j = i;
    while (!used[j]) {
      used[j] = true;
      int img = w(j);
      if (img < 0) ++negs;
      j = std::abs(img);
      ++len;
    }
    (negs % 2 == 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  return {pos, neg};
}

inline Int bn_class_size(const Bipartition& bp) {
  const int n = partition_sum(bp.first) + partition_sum(bp.second);
  Int denom = z_partition(bp.first) * z_partition(bp.second) *
              two_pow(num_parts(bp.first) + num_parts(bp.second));
  return two_pow(n) * factorial(n) / denom;
}

inline Int bn_order(int n) { return two_pow(n) * factorial(n); }

// Signed pattern containment: a subsequence of the short word whose signs
// match the pattern and whose absolute values are in the same relative
// order as the pattern's absolute values.
inline bool contains_signed_pattern(const SignedPerm& w,
                                    const std::vector<int>& pattern) {
  const auto& word = w.word();
  const size_t n = word.size(), k = pattern.size();
  if (k > n) return false;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, size_t start) -> bool {
    size_t got = chosen.size();
    if (got == k) return true;
    for (size_t i = start; i + (k - got) <= n; ++i) {
      if ((word[i] < 0) != (pattern[got] < 0)) continue;
      bool ok = true;
      for (size_t j = 0; j < got && ok; ++j) {
        bool need_less = std::abs(pattern[j]) > std::abs(pattern[got]);
        int a = std::abs(word[i]), b = std::abs(word[chosen[j]]);
        if (need_less ? !(a < b) : !(a > b)) ok = false;
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

// Smoothness test: the long word avoids 3412 and 4231.
inline bool bn_pavoiding(const SignedPerm& w) {
  return avoids_3412_and_4231(w.long_word());
}

inline bool sn_pavoiding(const Perm& w) {
  return avoids_3412_and_4231(w.word());
}

// The five signed patterns whose avoidance characterizes the signed
// codominant elements.
inline const std::vector<std::vector<int>>& bc_codominant_patterns() {
  static const std::vector<std::vector<int>> pats = {
      {1, -2}, {-2, 1}, {-2, -1}, {3, 1, 2}, {3, -1, 2}};
  return pats;
}

inline bool bn_codominant(const SignedPerm& w) {
  for (const auto& p : bc_codominant_patterns())
    if (contains_signed_pattern(w, p)) return false;
  return true;
}

// Direct sum of u in B_k with an ordinary permutation v, acting on the
// shifted letters k+1, k+2, ...
inline SignedPerm bn_oplus(const SignedPerm& u, const Perm& v) {
  std::vector<int> w = u.word();
  for (int x : v.word()) w.push_back(x + u.n());
  return SignedPerm(std::move(w));
}

// Does w split as u (+) v with u in B_k and v a positive permutation of
// the letters above k, for some 0 < k < n?
inline bool bn_oplus_decomposable(const SignedPerm& w) {
  const int n = w.n();
  for (int k = 1; k < n; ++k) {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i)
      if (std::abs(w(i)) > k) ok = false;
    for (int i = k + 1; i <= n && ok; ++i)
      if (w(i) <= k) ok = false;
    if (ok) return true;
  }
  return false;
}

inline std::string signed_to_string(const SignedPerm& w) {
  std::string s;
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) s += ' ';
    s += std::to_string(w(i));
  }
  return s;
}

// Accepts entries like "-3", "ol3", or "3", separated by whitespace.
inline SignedPerm parse_signed_perm(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> w;
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    size_t pos = 0;
    if (tok.rfind("ol", 0) == 0) {
      sign = -1;
      pos = 2;
    } else if (tok[0] == '-') {
      sign = -1;
      pos = 1;
    }
    w.push_back(sign * std::stoi(tok.substr(pos)));
  }
  return SignedPerm(std::move(w));
}

}  // namespace bcchroma
