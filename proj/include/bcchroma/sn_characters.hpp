#pragma once

#include <map>
#include <set>
#include <vector>

#include "bcchroma/kostka.hpp"
#include "bcchroma/partitions.hpp"

namespace bcchroma {

// Irreducible symmetric group character chi^lambda evaluated on the class
// of cycle type mu, by the Murnaghan-Nakayama rule.  Border strip removal
// is done on the beta set {lambda_i + (l - i)}: subtracting the strip size
// from one beta number (keeping the set valid) removes one strip, and the
// sign is the number of beta numbers jumped over.
inline Int sn_irreducible_character(const Partition& lambda,
                                    const Partition& mu) {
  if (partition_sum(lambda) != partition_sum(mu)) return 0;
  static std::map<std::pair<Partition, Partition>, Int> memo;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Int result;
  if (lambda.empty()) {
    result = 1;
  } else {
    const int l = static_cast<int>(lambda.size());
    std::set<int> beta;
    for (int i = 0; i < l; ++i) beta.insert(lambda[i] + (l - 1 - i));
    const int k = mu.front();
    Partition rest(mu.begin() + 1, mu.end());
    result = 0;
    for (int b : beta) {
      if (b < k || beta.count(b - k)) continue;
      int jumped = 0;
      for (int c : beta)
        if (b - k < c && c < b) ++jumped;
      std::set<int> nb = beta;
      nb.erase(b);
      nb.insert(b - k);
      // Rebuild the partition from the new beta set.
      std::vector<int> sorted(nb.begin(), nb.end());
      Partition nl;
      const int m = static_cast<int>(sorted.size());
      for (int i = m - 1; i >= 0; --i) {
        int part = sorted[i] - i;
        if (part > 0) nl.push_back(part);
      }
      Int term = sn_irreducible_character(nl, rest);
      result += (jumped % 2 == 0) ? term : -term;
    }
  }
  memo[key] = result;
  return result;
}

enum class SnBasis { chi, epsilon, eta, psi, phi, gamma };

// Value of the basis trace indexed by lambda on the class of cycle type mu.
// chi is irreducible; eta and epsilon are induced from the trivial and sign
// characters of Young subgroups; psi is the power sum trace supported on a
// single class; phi and gamma invert the Kostka expansions of eta and
// epsilon.  All six take integer values.
inline Int sn_trace_value(SnBasis basis, const Partition& lambda,
                          const Partition& mu) {
  const int n = partition_sum(lambda);
  if (partition_sum(mu) != n) return 0;
  switch (basis) {
    case SnBasis::chi:
      return sn_irreducible_character(lambda, mu);
    case SnBasis::eta: {
      Int v = 0;
      for (const auto& alpha : partitions_of(n))
        v += kostka_number(alpha, lambda) * sn_irreducible_character(alpha, mu);
      return v;
    }
    case SnBasis::epsilon: {
      Int v = 0;
      for (const auto& alpha : partitions_of(n))
        v += kostka_number(transpose(alpha), lambda) *
             sn_irreducible_character(alpha, mu);
      return v;
    }
    case SnBasis::psi:
      return lambda == mu ? z_partition(lambda) : Int(0);
    case SnBasis::phi: {
      Int v = 0;
      for (const auto& nu : partitions_of(n))
        v += kostka_inverse_entry(lambda, nu) *
             sn_irreducible_character(nu, mu);
      return v;
    }
    case SnBasis::gamma: {
      Int v = 0;
      for (const auto& nu : partitions_of(n))
        v += kostka_inverse_entry(lambda, transpose(nu)) *
             sn_irreducible_character(nu, mu);
      return v;
    }
  }
  return 0;
}

// Number of elements of cycle type mu in the symmetric group.
inline Int sn_class_size(const Partition& mu) {
  return factorial(partition_sum(mu)) / z_partition(mu);
}

}  // namespace bcchroma
