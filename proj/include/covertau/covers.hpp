#ifndef COVERTAU_COVERS_HPP
#define COVERTAU_COVERS_HPP

#include <numeric>
#include <optional>
#include <vector>

#include "covertau/numeric.hpp"
#include "covertau/permutation.hpp"

namespace covertau {

/// Ramification profile mu = [m_1 >= ... >= m_r], a partition of the degree.
struct RamificationProfile {
  std::vector<int> parts;

  RamificationProfile() = default;
  explicit RamificationProfile(std::vector<int> p) : parts(std::move(p)) {
    validate();
  }

  void validate() const {
    if (parts.empty()) throw error("ramification profile must have r >= 1");
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw error("ramification index must be positive");
      if (i + 1 < parts.size() && parts[i] < parts[i + 1])
        throw error("ramification profile must be weakly decreasing");
    }
  }

  int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int lcm() const {
    int m = 1;
    for (int p : parts) m = std::lcm(m, p);
    return m;
  }
  /// prod(m_i) / lcm(m_i): the number of local branches at the stratum.
  long long branch_count() const {
    long long prod = 1;
    for (int p : parts) prod *= p;
    return prod / lcm();
  }
  bool operator==(const RamificationProfile& o) const { return parts == o.parts; }
};

/// Genus from the branch-point count: n = 2g + 2d - 2 for covers with only
/// simple finite branch points, n(mu) = 2g + d + r - 2 when one value carries
/// profile mu.
inline int genus_from_branching(int d, int n_simple,
                                const std::optional<RamificationProfile>& profile = {}) {
  if (d <= 0 || n_simple <= 0) throw error("inconsistent branching data");
  long long twice_g;
  if (profile) {
    if (profile->degree() != d) throw error("inconsistent branching data");
    twice_g = static_cast<long long>(n_simple) - d - profile->length() + 2;
  } else {
    twice_g = static_cast<long long>(n_simple) - 2 * d + 2;
  }
  if (twice_g < 0 || twice_g % 2 != 0) throw error("inconsistent branching data");
  return static_cast<int>(twice_g / 2);
}

/// Combinatorial branched cover: ordered branch values with permutation
/// monodromy s_1..s_n, s_1 * ... * s_n = 1.
struct MonodromyCover {
  int degree = 0;
  std::vector<Complex> branch_values;
  std::vector<Permutation> monodromy;
  std::optional<RamificationProfile> infinity_profile;
  int genus = -1;  // filled in by validate_cover
};

inline MonodromyCover validate_cover(MonodromyCover cover) {
  if (cover.degree <= 0) throw error("degree must be positive");
  if (cover.branch_values.size() != cover.monodromy.size())
    throw error("branch value / monodromy length mismatch");
  if (cover.monodromy.empty()) throw error("cover needs at least one branch value");
  for (size_t i = 0; i < cover.branch_values.size(); ++i)
    for (size_t j = i + 1; j < cover.branch_values.size(); ++j)
      if (cover.branch_values[i] == cover.branch_values[j])
        throw error("branch values must be distinct");
  for (const auto& s : cover.monodromy) {
    if (s.degree() != cover.degree) throw error("monodromy degree mismatch");
    if (!s.is_transposition()) throw error("non-transposition at simple point");
  }
  if (!product(cover.monodromy).is_identity()) throw error("product not identity");
  if (!acts_transitively(cover.monodromy, cover.degree)) throw error("not transitive");
  cover.genus = genus_from_branching(cover.degree,
                                     static_cast<int>(cover.monodromy.size()),
                                     cover.infinity_profile);
  return cover;
}

/// Cycle type of the ordered product s_1 ... s_k, as a partition.
inline RamificationProfile node_profile(const std::vector<Permutation>& perms) {
  if (perms.empty()) throw error("node_profile needs at least one permutation");
  int d = perms[0].degree();
  for (const auto& p : perms)
    if (p.degree() != d) throw error("node_profile degree mismatch");
  return RamificationProfile(product(perms).cycle_type());
}

/// Order of the centralizer of the monodromy group inside S_d: the number of
/// automorphisms of a connected smooth cover.
inline long long automorphism_count(const MonodromyCover& cover) {
  if (cover.genus < 0) throw error("cover must be validated first");
  if (cover.degree > 9) throw error("automorphism_count: degree too large for enumeration");
  std::vector<int> img(cover.degree);
  std::iota(img.begin(), img.end(), 0);
  long long count = 0;
  do {
    Permutation g{img};
    bool commutes = true;
    for (const auto& s : cover.monodromy) {
      if (!(s * g == g * s)) {
        commutes = false;
        break;
      }
    }
    if (commutes) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

/// Riemann-Hurwitz consistency: 2g - 2 = -2d + sum_i (d - #cycles(s_i)).
inline bool riemann_hurwitz_consistent(const MonodromyCover& cover) {
  int defect = 0;
  for (const auto& s : cover.monodromy) defect += cover.degree - s.n_cycles();
  int extra = 0;
  if (cover.infinity_profile)
    extra = cover.degree - cover.infinity_profile->length();
  return 2 * cover.genus - 2 == -2 * cover.degree + defect + extra;
}

}  // namespace covertau

#endif
