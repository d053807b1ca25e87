#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcchroma/permutation.hpp"
#include "bcchroma/signed_permutation.hpp"

namespace bcchroma {

// Planar star networks.  A network is a concatenation of simple stars,
// one per interval in `factors`.  Type A networks live on a window of
// nonzero integers [lo, hi]; the signed flavor lives on [-n, n] and each
// declared factor [a,b] with a >= 1 stands for the star together with its
// mirror image, while a declared [-a, a] is a single self-mirrored star.
// Concatenation is condensed by default (parallel edges between adjacent
// star centers are merged, with multiplicity recorded); the ordinary mode
// keeps one edge per strand.

struct Interval {
  int a = 0, b = 0;

  bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
  bool operator<(const Interval& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

inline std::string interval_to_string(const Interval& iv) {
  return "[" + std::to_string(iv.a) + "," + std::to_string(iv.b) + "]";
}

// Heights are the nonzero integers of a window.
inline std::vector<int> window_heights(int lo, int hi) {
  std::vector<int> h;
  for (int i = lo; i <= hi; ++i)
    if (i != 0) h.push_back(i);
  return h;
}

inline int interval_height_count(const Interval& iv) {
  int c = iv.b - iv.a + 1;
  if (iv.a <= 0 && 0 <= iv.b) --c;
  return c;
}

inline bool interval_contains(const Interval& iv, int h) {
  return iv.a <= h && h <= iv.b;
}

inline bool intervals_overlap(const Interval& x, const Interval& y) {
  int lo = std::max(x.a, y.a), hi = std::min(x.b, y.b);
  if (lo > hi) return false;
  // Overlap must contain a height, not just the excluded zero strand.
  return !(lo == 0 && hi == 0);
}

// Neither interval contains the other; shared endpoints count as nesting.
inline bool intervals_nonnesting(const Interval& x, const Interval& y) {
  return (x.a - y.a) * (Int(x.b) - y.b) > 0 ||
         (!intervals_overlap(x, y) && x != y);
}

enum class Flavor { a, bc };
enum class Concat { condensed, ordinary };
enum class NetworkClass { none, zigzag, descending };

struct Network {
  Flavor flavor = Flavor::a;
  int lo = 1, hi = 1;
  Concat concat = Concat::condensed;
  std::vector<Interval> factors;

  bool operator==(const Network& o) const {
    return flavor == o.flavor && lo == o.lo && hi == o.hi &&
           concat == o.concat && factors == o.factors;
  }
  bool operator<(const Network& o) const {
    auto key = [](const Network& m) {
      return std::tuple(m.flavor, m.lo, m.hi, m.concat, m.factors);
    };
    return key(*this) < key(o);
  }
};

inline Network make_a_network(int lo, int hi, std::vector<Interval> factors,
                              Concat concat = Concat::condensed) {
  Network net{Flavor::a, lo, hi, concat, std::move(factors)};
  for (const auto& f : net.factors) {
    if (f.a < lo || f.b > hi || interval_height_count(f) < 2)
      throw std::invalid_argument("bad factor interval " +
                                  interval_to_string(f));
  }
  return net;
}

inline Network make_bc_network(int n, std::vector<Interval> factors,
                               Concat concat = Concat::condensed) {
  Network net{Flavor::bc, -n, n, concat, std::move(factors)};
  for (const auto& f : net.factors) {
    bool positive_pair = 1 <= f.a && f.a < f.b && f.b <= n;
    bool symmetric = f.a == -f.b && 1 <= f.b && f.b <= n;
    if (!positive_pair && !symmetric)
      throw std::invalid_argument("bad signed factor " +
                                  interval_to_string(f));
  }
  return net;
}

// Expanded drawing: one entry per simple star, tagged with the declared
// factor it came from.  Signed factors [a,b] expand to the star and its
// mirror; symmetric factors stay single.
struct ExpandedFactor {
  Interval interval;
  int declared;  // 0-based index into Network::factors
};

inline std::vector<ExpandedFactor> expanded_factors(const Network& net) {
  std::vector<ExpandedFactor> out;
  for (size_t k = 0; k < net.factors.size(); ++k) {
    const Interval& f = net.factors[k];
    if (net.flavor == Flavor::bc && f.a > 0) {
      out.push_back({f, static_cast<int>(k)});
      out.push_back({{-f.b, -f.a}, static_cast<int>(k)});
    } else {
      out.push_back({f, static_cast<int>(k)});
    }
  }
  return out;
}

// For the signed flavor the interaction between declared factors is read
// off the union of each factor's two star height sets.
inline std::set<int> factor_height_set(const Network& net, const Interval& f) {
  std::set<int> s;
  for (int h = f.a; h <= f.b; ++h)
    if (h != 0) {
      s.insert(h);
      if (net.flavor == Flavor::bc) s.insert(-h);
    }
  return s;
}

namespace detail {

// Covering relation on factor positions: i relates to j > i when their
// intersection is not swallowed by the factors strictly between them.
inline std::vector<std::vector<bool>> interval_precdot(
    const std::vector<std::set<int>>& hsets) {
  const size_t t = hsets.size();
  std::vector<std::vector<bool>> rel(t, std::vector<bool>(t, false));
  for (size_t i = 0; i < t; ++i)
    for (size_t j = i + 1; j < t; ++j) {
      for (int h : hsets[i]) {
        if (!hsets[j].count(h)) continue;
        bool swallowed = false;
        for (size_t m = i + 1; m < j && !swallowed; ++m)
          if (hsets[m].count(h)) swallowed = true;
        if (!swallowed) {
          rel[i][j] = true;
          break;
        }
      }
    }
  return rel;
}

inline std::vector<std::vector<bool>> transitive_closure(
    std::vector<std::vector<bool>> rel) {
  const size_t t = rel.size();
  for (size_t m = 0; m < t; ++m)
    for (size_t i = 0; i < t; ++i)
      for (size_t j = 0; j < t; ++j)
        if (rel[i][m] && rel[m][j]) rel[i][j] = true;
  return rel;
}

}  // namespace detail

// Structural classification of the declared factor list.  Both classes
// require distinct, pairwise nonnesting intervals; the zig-zag condition
// constrains chained overlaps of triples to be monotone, the descending
// condition forces every overlapping pair to move left.
inline bool factors_distinct_nonnesting(const std::vector<Interval>& f) {
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] == f[j]) return false;
      if (intervals_overlap(f[i], f[j]) && !intervals_nonnesting(f[i], f[j]))
        return false;
      if (!intervals_overlap(f[i], f[j]) &&
          (interval_contains(f[i], f[j].a) || interval_contains(f[j], f[i].a)))
        return false;
    }
  return true;
}

inline bool is_zigzag(const Network& net) {
  const auto& f = net.factors;
  if (!factors_distinct_nonnesting(f)) return false;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      for (size_t k = j + 1; k < f.size(); ++k) {
        if (!intervals_overlap(f[i], f[j]) || !intervals_overlap(f[j], f[k]))
          continue;
        bool inc = f[i].a < f[j].a && f[j].a < f[k].a;
        bool dec = f[i].a > f[j].a && f[j].a > f[k].a;
        if (!inc && !dec) return false;
      }
  return true;
}

inline bool is_descending(const Network& net) {
  const auto& f = net.factors;
  if (!factors_distinct_nonnesting(f)) return false;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      if (intervals_overlap(f[i], f[j]) && f[i].a <= f[j].a) return false;
  return true;
}

inline NetworkClass classify(const Network& net) {
  if (is_descending(net)) return NetworkClass::descending;
  if (is_zigzag(net)) return NetworkClass::zigzag;
  return NetworkClass::none;
}

// Canonical factor order: the interval poset is kept, incomparable
// factors (necessarily disjoint) are emitted smallest first.  Networks
// are equal exactly when their canonical forms agree.
inline Network canonical_network(const Network& net) {
  const size_t t = net.factors.size();
  std::vector<std::set<int>> hsets;
  for (const auto& f : net.factors) hsets.push_back(factor_height_set(net, f));
  auto rel = detail::transitive_closure(detail::interval_precdot(hsets));
  std::vector<bool> placed(t, false);
  std::vector<Interval> sorted;
  for (size_t step = 0; step < t; ++step) {
    int best = -1;
    for (size_t j = 0; j < t; ++j) {
      if (placed[j]) continue;
      bool ready = true;
      for (size_t i = 0; i < t && ready; ++i)
        if (!placed[i] && rel[i][j]) ready = false;
      if (!ready) continue;
      if (best < 0 || net.factors[j] < net.factors[best]) best = static_cast<int>(j);
    }
    assert(best >= 0);
    placed[best] = true;
    sorted.push_back(net.factors[best]);
  }
  Network out = net;
  out.factors = std::move(sorted);
  return out;
}

// One line word of the network over its window heights: the image list
// of the sorted heights under the strand permutation.
inline std::vector<int> network_word(const Network& net) {
  const auto expanded = expanded_factors(net);
  std::vector<std::set<int>> hsets;
  for (const auto& ef : expanded) {
    std::set<int> s;
    for (int h = ef.interval.a; h <= ef.interval.b; ++h)
      if (h != 0) s.insert(h);
    hsets.push_back(std::move(s));
  }
  const auto prec = detail::interval_precdot(hsets);

  // Reversal sequence: start from the star list and, for each related
  // pair with a fat intersection, wedge the intersection reversal right
  // after the earlier star.
  struct Rev {
    Interval iv;
    int origin;  // expanded index, -1 for inserted reversals
  };
  std::vector<Rev> seq;
  for (size_t i = 0; i < expanded.size(); ++i)
    seq.push_back({expanded[i].interval, static_cast<int>(i)});
  for (size_t i = 0; i < expanded.size(); ++i)
    for (size_t j = i + 1; j < expanded.size(); ++j) {
      if (!prec[i][j]) continue;
      Interval cap{std::max(expanded[i].interval.a, expanded[j].interval.a),
                   std::min(expanded[i].interval.b, expanded[j].interval.b)};
      if (interval_height_count(cap) < 2) continue;
      auto pos = std::find_if(seq.begin(), seq.end(), [&](const Rev& r) {
        return r.origin == static_cast<int>(i);
      });
      seq.insert(pos + 1, Rev{cap, -1});
    }

  // Multiply the reversals left to right.
  const auto heights = window_heights(net.lo, net.hi);
  std::map<int, int> cur;
  for (int h : heights) cur[h] = h;
  for (const auto& rev : seq) {
    std::vector<int> inside;
    for (int h : heights)
      if (interval_contains(rev.iv, h)) inside.push_back(h);
    std::map<int, int> image;
    for (size_t r = 0; r < inside.size(); ++r)
      image[inside[r]] = inside[inside.size() - 1 - r];
    for (int h : heights) {
      auto it = image.find(cur[h]);
      if (it != image.end()) cur[h] = it->second;
    }
  }
  std::vector<int> word;
  for (int h : heights) word.push_back(cur[h]);
  return word;
}

inline SignedPerm bc_network_word(const Network& net) {
  assert(net.flavor == Flavor::bc);
  const int n = net.hi;
  const auto word = network_word(net);
  // Symmetry of the strand permutation is automatic for signed networks.
  std::vector<int> short_word(word.end() - n, word.end());
  for (int i = 0; i < n; ++i) assert(word[n - 1 - i] == -short_word[i]);
  return SignedPerm(std::move(short_word));
}

// Descending factorization of a word avoiding 312, drawn on arbitrary
// window positions: each record position j with letter w_j contributes
// the star on [j, w_j], emitted in reverse record order.
inline std::vector<Interval> descending_factors_for_word(
    const std::vector<int>& positions, const std::vector<int>& letters) {
  assert(positions.size() == letters.size());
  if (!avoids_312(letters))
    throw std::invalid_argument("word does not avoid 312");
  std::vector<Interval> factors;
  for (int r : record_positions(letters)) {
    Interval iv{positions[r], letters[r]};
    if (iv.a == iv.b) continue;
    factors.push_back(iv);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

inline Network descending_network_of(const Perm& w) {
  std::vector<int> pos(w.size());
  std::iota(pos.begin(), pos.end(), 1);
  return make_a_network(1, w.size(), descending_factors_for_word(pos, w.word()));
}

// Signed analogue for codominant elements.  The negative letters must be
// -1..-b; prepending the staircase b,...,1 on the mirrored positions
// turns the word into a 312-avoiding window word whose descending
// factorization yields the declared signed factors.
inline Network bc_descending_network_of(const SignedPerm& w) {
  const int n = w.n();
  int b = 0;
  {
    std::set<int> negs;
    for (int x : w.word())
      if (x < 0) negs.insert(-x);
    b = static_cast<int>(negs.size());
    for (int i = 1; i <= b; ++i)
      if (!negs.count(i))
        throw std::invalid_argument("negative letters are not a bottom block");
  }
  std::vector<int> pos, letters;
  for (int j = b; j >= 1; --j) {
    pos.push_back(-j);
    letters.push_back(j);
  }
  for (int j = 1; j <= n; ++j) {
    pos.push_back(j);
    letters.push_back(w(j));
  }
  return make_bc_network(n, descending_factors_for_word(pos, letters));
}

// Zig-zag network enumeration by depth first extension of the factor
// list.  Candidate intervals for the signed flavor are the declared
// shapes; for type A all subintervals of the window with at least two
// heights.  Results are canonical forms, so each network appears once.
inline std::vector<Interval> candidate_intervals(Flavor flavor, int lo,
                                                 int hi) {
  std::vector<Interval> cand;
  if (flavor == Flavor::bc) {
    const int n = hi;
    for (int a = 1; a <= n; ++a) {
      for (int b2 = a + 1; b2 <= n; ++b2) cand.push_back({a, b2});
      cand.push_back({-a, a});
    }
  } else {
    for (int a = lo; a <= hi; ++a)
      for (int b2 = a + 1; b2 <= hi; ++b2) {
        Interval iv{a, b2};
        if (interval_height_count(iv) >= 2) cand.push_back(iv);
      }
  }
  return cand;
}

inline std::vector<Network> enumerate_networks(Flavor flavor, int lo, int hi,
                                               NetworkClass klass) {
  assert(klass != NetworkClass::none);
  const auto cand = candidate_intervals(flavor, lo, hi);
  std::set<Network> seen;
  std::vector<Network> out;
  Network net{flavor, lo, hi, Concat::condensed, {}};
  auto emit = [&]() {
    Network canon = canonical_network(net);
    if (seen.insert(canon).second) out.push_back(canon);
  };
  auto ok = [&](const Interval& next) {
    net.factors.push_back(next);
    bool good = klass == NetworkClass::descending ? is_descending(net)
                                                  : is_zigzag(net);
    net.factors.pop_back();
    return good;
  };
  auto rec = [&](auto&& self) -> void {
    emit();
    for (const auto& iv : cand) {
      if (std::find(net.factors.begin(), net.factors.end(), iv) !=
          net.factors.end())
        continue;
      if (!ok(iv)) continue;
      net.factors.push_back(iv);
      self(self);
      net.factors.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Lookup table from smooth window words to their zig-zag networks.  The
// classification theorems guarantee exactly one canonical network per
// smooth element; confirmed by construction here.
inline const std::map<std::vector<int>, Network>& zigzag_table(Flavor flavor,
                                                               int lo,
                                                               int hi) {
  static std::map<std::tuple<Flavor, int, int>,
                  std::map<std::vector<int>, Network>>
      cache;
  auto key = std::make_tuple(flavor, lo, hi);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::map<std::vector<int>, Network> table;
    for (const auto& net :
         enumerate_networks(flavor, lo, hi, NetworkClass::zigzag)) {
      auto word = network_word(net);
      if (table.count(word))
        throw std::logic_error("two zig-zag networks share a word");
      table.emplace(std::move(word), net);
    }
    it = cache.emplace(key, std::move(table)).first;
  }
  return it->second;
}

// The zig-zag network of a smooth element, by table lookup.
inline Network zigzag_network_of(const SignedPerm& w) {
  const auto& table = zigzag_table(Flavor::bc, -w.n(), w.n());
  std::vector<int> word = w.long_word();
  auto it = table.find(word);
  if (it == table.end())
    throw std::invalid_argument("element is not smooth: " +
                                signed_to_string(w));
  return it->second;
}

inline Network zigzag_network_of(const Perm& w) {
  const auto& table = zigzag_table(Flavor::a, 1, w.size());
  auto it = table.find(w.word());
  if (it == table.end())
    throw std::invalid_argument("permutation is not smooth");
  return it->second;
}

// Degree shift identifying signed zig-zag networks on 2n strands with
// type A zig-zag networks on n+1 strands.
inline Network bc_to_a_shift(const Network& net) {
  assert(net.flavor == Flavor::bc);
  Network out = make_a_network(1, net.hi + 1, {});
  for (const auto& f : net.factors) {
    if (f.a > 0)
      out.factors.push_back({f.a + 1, f.b + 1});
    else
      out.factors.push_back({1, f.b + 1});
  }
  return out;
}

inline Network a_to_bc_shift(const Network& net) {
  assert(net.flavor == Flavor::a && net.lo == 1);
  Network out = make_bc_network(net.hi - 1, {});
  for (const auto& f : net.factors) {
    if (f.a >= 2)
      out.factors.push_back({f.a - 1, f.b - 1});
    else
      out.factors.push_back({-(f.b - 1), f.b - 1});
  }
  return out;
}

// Direct sum: the signed network keeps its factors, the type A summand
// is shifted above them.
inline Network oplus_network(const Network& e, const Network& f) {
  assert(e.flavor == Flavor::bc && f.flavor == Flavor::a && f.lo == 1);
  const int k = e.hi, m = f.hi;
  Network out = make_bc_network(k + m, {});
  out.factors = e.factors;
  for (const auto& iv : f.factors) out.factors.push_back({iv.a + k, iv.b + k});
  return out;
}

inline std::string network_to_string(const Network& net) {
  std::string s = net.flavor == Flavor::bc ? "BC[" : "A[";
  s += std::to_string(net.lo) + "," + std::to_string(net.hi) + "]:";
  if (net.factors.empty()) s += " empty";
  for (size_t i = 0; i < net.factors.size(); ++i) {
    s += i ? ";" : " ";
    s += interval_to_string(net.factors[i]);
  }
  return s;
}

}  // namespace bcchroma
