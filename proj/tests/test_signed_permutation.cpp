#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <queue>
#include <set>

#include "bcchroma/signed_permutation.hpp"

using namespace bcchroma;

TEST_CASE("pattern containment on plain words") {
  REQUIRE(contains_pattern({3, 7, 5, 2, 1, 4, 6}, {3, 1, 2}));
  REQUIRE(avoids_pattern({2, 3, 4, 1}, {3, 1, 2}));
  REQUIRE(avoids_pattern({1, 2, 3}, {2, 1}));
  REQUIRE(contains_pattern({1, 3, 2}, {2, 1}));
  REQUIRE(contains_pattern({-2, 1, 3}, {1, 2, 3}));
  REQUIRE(avoids_pattern({3, 1, -2}, {1, 2}));
  // 312-avoiding permutations of S_4 are counted by the Catalan number 14.
  int count = 0;
  for (const auto& p : all_permutations(4))
    if (avoids_312(p.word())) ++count;
  REQUIRE(count == 14);
}

TEST_CASE("composition applies the left factor first") {
  // Generator products act on positions left to right.
  SignedPerm t = bn_t_generator(4);
  SignedPerm s1 = bn_s_generator(4, 1);
  SignedPerm s2 = bn_s_generator(4, 2);
  SignedPerm p = t * s1 * s2;
  REQUIRE(p.word() == std::vector<int>{-3, 1, 2, 4});
}

TEST_CASE("reversal products in the symmetric group") {
  Perm w = reversal_perm(7, 2, 5) * reversal_perm(7, 4, 5) *
           reversal_perm(7, 2, 3) * reversal_perm(7, 1, 3) *
           reversal_perm(7, 4, 6) * reversal_perm(7, 6, 7);
  REQUIRE(w.word() == std::vector<int>{3, 7, 5, 2, 1, 4, 6});
}

TEST_CASE("inverse and identity laws") {
  for (const auto& w : all_signed_permutations(3)) {
    REQUIRE((w * w.inverse()) == SignedPerm::identity(3));
    REQUIRE((w.inverse() * w) == SignedPerm::identity(3));
  }
  SignedPerm u = parse_signed_perm("2 -3 1");
  SignedPerm v = parse_signed_perm("-1 3 2");
  REQUIRE((u * v).inverse() == v.inverse() * u.inverse());
}

TEST_CASE("length agrees with Cayley graph distance") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<SignedPerm> gens = {bn_t_generator(n)};
    for (int i = 1; i < n; ++i) gens.push_back(bn_s_generator(n, i));
    std::map<SignedPerm, int> dist;
    std::queue<SignedPerm> bfs;
    dist[SignedPerm::identity(n)] = 0;
    bfs.push(SignedPerm::identity(n));
    while (!bfs.empty()) {
      SignedPerm w = bfs.front();
      bfs.pop();
      for (const auto& g : gens) {
        SignedPerm next = w * g;
        if (!dist.count(next)) {
          dist[next] = dist[w] + 1;
          bfs.push(next);
        }
      }
    }
    REQUIRE(dist.size() == static_cast<size_t>(to_ll(bn_order(n))));
    for (const auto& [w, d] : dist) REQUIRE(bn_length(w) == d);
  }
}

TEST_CASE("length statistics on a sample element") {
  SignedPerm w = parse_signed_perm("ol3 1 2 4");
  REQUIRE(bn_length(w) == 3);
  REQUIRE(bn_neg_count(w) == 1);
  REQUIRE(bn_length_s(w) == 2);
}

TEST_CASE("long word is the symmetric rearrangement") {
  SignedPerm w = parse_signed_perm("2 -3 1");
  REQUIRE(w.long_word() == std::vector<int>{-1, 3, -2, 2, -3, 1});
  REQUIRE(w(-2) == 3);
}

TEST_CASE("long word composition is a homomorphism into S_2n") {
  auto to_positive = [](const std::vector<int>& lw) {
    int n = static_cast<int>(lw.size()) / 2;
    std::vector<int> v;
    for (int x : lw) v.push_back(x > 0 ? x + n : x + n + 1);
    return Perm(v);
  };
  auto bn = all_signed_permutations(2);
  for (const auto& u : bn)
    for (const auto& v : bn)
      REQUIRE(to_positive((u * v).long_word()) ==
              to_positive(u.long_word()) * to_positive(v.long_word()));
}

TEST_CASE("Bruhat order on S_4 below 3421") {
  Perm w({3, 4, 2, 1});
  int below = 0;
  for (const auto& v : all_permutations(4))
    if (bruhat_leq(v, w)) ++below;
  REQUIRE(below == 18);
}

TEST_CASE("Bruhat order is a graded partial order on B_3") {
  auto bn = all_signed_permutations(3);
  for (const auto& u : bn) {
    REQUIRE(bn_bruhat_leq(u, u));
    REQUIRE(bn_bruhat_leq(SignedPerm::identity(3), u));
    for (const auto& v : bn) {
      if (bn_bruhat_leq(u, v) && bn_bruhat_leq(v, u)) REQUIRE(u == v);
      if (bn_bruhat_leq(u, v) && u != v) REQUIRE(bn_length(u) < bn_length(v));
      for (const auto& w : bn)
        if (bn_bruhat_leq(u, v) && bn_bruhat_leq(v, w))
          REQUIRE(bn_bruhat_leq(u, w));
    }
  }
}

TEST_CASE("signed Bruhat test matches the long word test") {
  auto to_positive = [](const std::vector<int>& lw) {
    std::vector<int> v = lw;
    return v;
  };
  for (int n = 2; n <= 3; ++n) {
    auto bn = all_signed_permutations(n);
    for (const auto& u : bn)
      for (const auto& w : bn)
        REQUIRE(bn_bruhat_leq(u, w) ==
                bruhat_leq_words(to_positive(u.long_word()),
                                 to_positive(w.long_word())));
  }
}

TEST_CASE("signed cycle types and class sizes") {
  REQUIRE(signed_cycle_type(SignedPerm::identity(3)) ==
          Bipartition{{1, 1, 1}, {}});
  REQUIRE(signed_cycle_type(parse_signed_perm("-1")) == Bipartition{{}, {1}});
  REQUIRE(signed_cycle_type(parse_signed_perm("2 -1")) == Bipartition{{}, {2}});
  REQUIRE(signed_cycle_type(parse_signed_perm("-2 -1")) == Bipartition{{2}, {}});

  for (int n = 1; n <= 4; ++n) {
    std::map<Bipartition, Int> census;
    for (const auto& w : all_signed_permutations(n))
      census[signed_cycle_type(w)] += 1;
    Int total = 0;
    for (const auto& bp : bipartitions_of(n)) {
      REQUIRE(census[bp] == bn_class_size(bp));
      total += census[bp];
    }
    REQUIRE(total == bn_order(n));
  }
}

TEST_CASE("sign of the reflection count is a class function") {
  for (const auto& w : all_signed_permutations(3)) {
    auto [lam, mu] = signed_cycle_type(w);
    int expected = num_parts(mu) % 2 == 0 ? 1 : -1;
    REQUIRE((bn_neg_count(w) % 2 == 0 ? 1 : -1) == expected);
  }
}

TEST_CASE("sct is invariant under conjugation") {
  auto b3 = all_signed_permutations(3);
  for (size_t i = 0; i < b3.size(); i += 7)
    for (size_t j = 0; j < b3.size(); ++j) {
      const auto& w = b3[i];
      const auto& g = b3[j];
      REQUIRE(signed_cycle_type(g.inverse() * w * g) == signed_cycle_type(w));
    }
}

TEST_CASE("pattern avoidance censuses") {
  int s4 = 0;
  for (const auto& p : all_permutations(4))
    if (sn_pavoiding(p)) ++s4;
  REQUIRE(s4 == 22);

  std::vector<int> bn_smooth = {0, 2, 6, 22};
  std::vector<int> bn_codom = {0, 2, 5, 14};
  for (int n = 1; n <= 3; ++n) {
    int smooth = 0, codom = 0;
    for (const auto& w : all_signed_permutations(n)) {
      if (bn_pavoiding(w)) ++smooth;
      if (bn_codominant(w)) ++codom;
      // Signed codominance implies smoothness.
      if (bn_codominant(w)) REQUIRE(bn_pavoiding(w));
    }
    REQUIRE(smooth == bn_smooth[n]);
    REQUIRE(codom == bn_codom[n]);
  }
}

TEST_CASE("codominant elements in B_4 count the fifth Catalan number") {
  int codom = 0;
  for (const auto& w : all_signed_permutations(4))
    if (bn_codominant(w)) ++codom;
  REQUIRE(codom == 42);
}

TEST_CASE("avoiding the two mixed sign patterns pins the negative letters") {
  for (const auto& w : all_signed_permutations(4)) {
    bool avoids = !contains_signed_pattern(w, {1, -2}) &&
                  !contains_signed_pattern(w, {-2, 1});
    std::set<int> negs;
    for (int x : w.word())
      if (x < 0) negs.insert(-x);
    bool prefix_form = true;
    int b = static_cast<int>(negs.size());
    for (int i = 1; i <= b; ++i)
      if (!negs.count(i)) prefix_form = false;
    REQUIRE(avoids == prefix_form);
  }
}

TEST_CASE("direct sum") {
  SignedPerm u = parse_signed_perm("-1");
  Perm v({2, 3, 1});
  REQUIRE(bn_oplus(u, v).word() == std::vector<int>{-1, 3, 4, 2});
  REQUIRE(bn_oplus_decomposable(bn_oplus(u, v)));
  REQUIRE(!bn_oplus_decomposable(parse_signed_perm("3 -1 -2")));
  REQUIRE(!bn_oplus_decomposable(SignedPerm::identity(1)));
}

TEST_CASE("string round trips") {
  SignedPerm w = parse_signed_perm("ol2 3 ol1");
  REQUIRE(w.word() == std::vector<int>{-2, 3, -1});
  REQUIRE(parse_signed_perm(signed_to_string(w)) == w);
}

TEST_CASE("record positions") {
  REQUIRE(record_positions({3, 7, 5, 2, 1, 4, 6}) == std::vector<int>{0, 1});
  REQUIRE(record_positions({2, 3, 4, 1}) == std::vector<int>{0, 1, 2});
  REQUIRE(record_positions({2, 1, 3}) == std::vector<int>{0, 2});
}
