#include <catch2/catch_amalgamated.hpp>

#include "bcchroma/sn_characters.hpp"

using namespace bcchroma;

namespace {

Int chi(const Partition& l, const Partition& m) {
  return sn_irreducible_character(l, m);
}

}  // namespace

TEST_CASE("S3 character table") {
  // Classes in canonical order: (3), (2,1), (1,1,1).
  REQUIRE(chi({3}, {3}) == 1);
  REQUIRE(chi({3}, {2, 1}) == 1);
  REQUIRE(chi({3}, {1, 1, 1}) == 1);
  REQUIRE(chi({2, 1}, {3}) == -1);
  REQUIRE(chi({2, 1}, {2, 1}) == 0);
  REQUIRE(chi({2, 1}, {1, 1, 1}) == 2);
  REQUIRE(chi({1, 1, 1}, {3}) == 1);
  REQUIRE(chi({1, 1, 1}, {2, 1}) == -1);
  REQUIRE(chi({1, 1, 1}, {1, 1, 1}) == 1);
}

TEST_CASE("S4 character table") {
  // Rows chi^lambda, columns (4), (3,1), (2,2), (2,1,1), (1^4).
  std::vector<Partition> cls = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  std::vector<std::vector<Int>> table = {
      {1, 1, 1, 1, 1},
      {-1, 0, -1, 1, 3},
      {0, -1, 2, 0, 2},
      {1, 0, -1, -1, 3},
      {-1, 1, 1, -1, 1},
  };
  auto rows = partitions_of(4);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cls.size(); ++j)
      REQUIRE(chi(rows[i], cls[j]) == table[i][j]);
}

TEST_CASE("character orthogonality") {
  for (int n = 2; n <= 6; ++n) {
    auto parts = partitions_of(n);
    for (const auto& l : parts)
      for (const auto& k : parts) {
        Int dot = 0;
        for (const auto& mu : parts)
          dot += sn_class_size(mu) * chi(l, mu) * chi(k, mu);
        REQUIRE(dot == (l == k ? factorial(n) : Int(0)));
      }
  }
}

TEST_CASE("trivial and sign rows") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      REQUIRE(chi({n}, mu) == 1);
      Partition col(n, 1);
      int sign = (n - static_cast<int>(mu.size())) % 2 == 0 ? 1 : -1;
      REQUIRE(chi(col, mu) == sign);
    }
}

TEST_CASE("trace bases: degenerate shapes") {
  for (int n = 1; n <= 6; ++n) {
    Partition row = {n};
    Partition col(n, 1);
    for (const auto& mu : partitions_of(n)) {
      int sgn = (n - static_cast<int>(mu.size())) % 2 == 0 ? 1 : -1;
      bool id = (mu == col);
      REQUIRE(sn_trace_value(SnBasis::eta, row, mu) == 1);
      REQUIRE(sn_trace_value(SnBasis::epsilon, row, mu) == sgn);
      // The one column shape induces the regular trace either way.
      REQUIRE(sn_trace_value(SnBasis::eta, col, mu) ==
              (id ? factorial(n) : Int(0)));
      REQUIRE(sn_trace_value(SnBasis::epsilon, col, mu) ==
              (id ? factorial(n) : Int(0)));
    }
  }
}

TEST_CASE("eta at the identity is a multinomial coefficient") {
  Partition id4(4, 1);
  REQUIRE(sn_trace_value(SnBasis::eta, {2, 1, 1}, id4) == 12);
  REQUIRE(sn_trace_value(SnBasis::eta, {2, 2}, id4) == 6);
  REQUIRE(sn_trace_value(SnBasis::eta, {3, 1}, id4) == 4);
  Partition id3(3, 1);
  REQUIRE(sn_trace_value(SnBasis::eta, {2, 1}, id3) == 3);
}

TEST_CASE("epsilon is the sign twist of eta") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        int sgn = (n - static_cast<int>(mu.size())) % 2 == 0 ? 1 : -1;
        REQUIRE(sn_trace_value(SnBasis::epsilon, l, mu) ==
                sgn * sn_trace_value(SnBasis::eta, l, mu));
      }
}

TEST_CASE("psi is supported on its own class with value z") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : partitions_of(n))
        REQUIRE(sn_trace_value(SnBasis::psi, l, mu) ==
                (l == mu ? z_partition(l) : Int(0)));
}

TEST_CASE("phi and gamma invert the Kostka expansions") {
  for (int n = 1; n <= 6; ++n) {
    auto parts = partitions_of(n);
    for (const auto& nu : parts)
      for (const auto& mu : parts) {
        Int viaphi = 0, viagamma = 0;
        for (const auto& l : parts) {
          viaphi += kostka_number(nu, l) * sn_trace_value(SnBasis::phi, l, mu);
          viagamma += kostka_number(transpose(nu), l) *
                      sn_trace_value(SnBasis::gamma, l, mu);
        }
        REQUIRE(viaphi == chi(nu, mu));
        REQUIRE(viagamma == chi(nu, mu));
      }
  }
}

TEST_CASE("psi expands through chi with character coefficients") {
  // psi^lambda = sum_nu chi^nu(lambda) chi^nu, the power sum expansion.
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        Int v = 0;
        for (const auto& nu : partitions_of(n))
          v += chi(nu, l) * chi(nu, mu);
        REQUIRE(v == sn_trace_value(SnBasis::psi, l, mu));
      }
}
