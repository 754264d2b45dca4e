#ifndef COVERTAU_STRATA_HPP
#define COVERTAU_STRATA_HPP

#include <optional>
#include <vector>

#include "covertau/covers.hpp"
#include "covertau/permutation.hpp"

namespace covertau {

/// Boundary stratum Delta_mu^(k): k branch points on the first component,
/// ramification profile mu over the node.  The range 2 <= k <= g+d-1 selects
/// one representative of each {k, n-k} split; the complementary stratum is
/// not identified with it.
struct BoundaryStratum {
  int k = 0;
  RamificationProfile profile;
  int lcm = 1;
  long long branch_count = 1;

  BoundaryStratum() = default;
  BoundaryStratum(int g, int d, int k_, RamificationProfile mu)
      : k(k_), profile(std::move(mu)) {
    if (profile.degree() != d) throw error("profile degree mismatch");
    if (k < 2 || k > g + d - 1) throw error("k out of range 2..g+d-1");
    // A product of k transpositions has parity k; cycle type mu has parity d-r.
    if ((k - (d - profile.length())) % 2 != 0) throw error("parity constraint violated");
    lcm = profile.lcm();
    branch_count = profile.branch_count();
  }
};

/// All parity-admissible strata for the space of degree-d genus-g admissible
/// covers.  Non-emptiness beyond the parity constraint is not claimed; use
/// stratum_realizable for a brute-force existence check.
inline std::vector<BoundaryStratum> enumerate_strata(int g, int d) {
  if (g < 0 || d < 2) throw error("enumerate_strata: need g >= 0, d >= 2");
  std::vector<BoundaryStratum> out;
  auto mus = partitions_of(d);
  for (int k = 2; k <= g + d - 1; ++k) {
    for (const auto& mu : mus) {
      int r = static_cast<int>(mu.size());
      if ((k - (d - r)) % 2 != 0) continue;
      out.emplace_back(g, d, k, RamificationProfile(mu));
    }
  }
  return out;
}

/// True iff transpositions t_1..t_k in S_d exist with product of cycle type
/// mu and, in full mode, an extension by n-k further transpositions to a
/// transitive identity-product tuple of the genus-g branch count n = 2g+2d-2.
inline bool stratum_realizable(int g, int d, const BoundaryStratum& stratum,
                               bool full_cover_mode = true,
                               long long budget_cap = 50'000'000) {
  if (d > 6 || stratum.k > 10) throw error("stratum_realizable: d <= 6, k <= 10 required");
  const int n = 2 * g + 2 * d - 2;
  const int k = stratum.k;
  if (k > n) return false;
  const auto trans = all_transpositions(d);

  long long nodes = 0;
  auto tick = [&] {
    if (++nodes > budget_cap) throw error("search budget exceeded");
  };

  std::vector<Permutation> tuple;
  tuple.reserve(n);

  // Extend tuple (length k, head product p of type mu) by n-k transpositions
  // to an identity-product transitive tuple.  The last factor is forced.
  auto extend = [&](auto&& self, const Permutation& acc, int remaining) -> bool {
    tick();
    if (remaining == 1) {
      Permutation last = acc.inverse();
      if (!last.is_transposition()) return false;
      tuple.push_back(last);
      bool ok = acts_transitively(tuple, d);
      tuple.pop_back();
      return ok;
    }
    for (const auto& t : trans) {
      tuple.push_back(t);
      if (self(self, acc * t, remaining - 1)) return true;
      tuple.pop_back();
    }
    return false;
  };

  auto head = [&](auto&& self, const Permutation& acc, int remaining) -> bool {
    tick();
    if (remaining == 0) {
      if (!(acc.cycle_type() == stratum.profile.parts)) return false;
      if (!full_cover_mode) return true;
      if (n - k == 0) return acc.is_identity() && acts_transitively(tuple, d);
      return extend(extend, acc, n - k);
    }
    for (const auto& t : trans) {
      tuple.push_back(t);
      if (self(self, acc * t, remaining - 1)) return true;
      tuple.pop_back();
    }
    return false;
  };

  return head(head, Permutation(d), k);
}

}  // namespace covertau

#endif
