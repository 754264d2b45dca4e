#ifndef COVERTAU_PERMUTATION_HPP
#define COVERTAU_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "covertau/numeric.hpp"

namespace covertau {

/// Permutation of {0,...,d-1}.  Products compose left to right: (s*t) applies
/// s first, then t, so a monodromy tuple multiplies out as s1*s2*...*sn.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw error("invalid permutation image list");
      seen[v] = 1;
    }
  }

  /// Build from disjoint cycles over 1-based symbols (the JSON wire format).
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i] - 1;
        int to = cyc[(i + 1) % cyc.size()] - 1;
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw error("cycle symbol out of range");
        img[from] = to;
      }
    }
    return Permutation(img);
  }

  static Permutation transposition(int degree, int a, int b) {
    Permutation p(degree);
    std::swap(p.img_[a], p.img_[b]);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  bool operator==(const Permutation& o) const { return img_ == o.img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  bool is_transposition() const {
    int moved = 0;
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) ++moved;
    return moved == 2;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Permutation(inv);
  }

  /// s * t: apply s, then t.
  friend Permutation operator*(const Permutation& s, const Permutation& t) {
    std::vector<int> img(s.img_.size());
    for (int i = 0; i < s.degree(); ++i) img[i] = t.img_[s.img_[i]];
    return Permutation(img);
  }

  /// Conjugate g^{-1} * s * g.
  Permutation conjugate(const Permutation& g) const {
    return g.inverse() * (*this) * g;
  }

  /// Cycle type as a weakly decreasing partition of the degree.
  std::vector<int> cycle_type() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<int> parts;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = img_[j];
        ++len;
      }
      parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
  }

  int n_cycles() const { return static_cast<int>(cycle_type().size()); }

  /// Cycles over 1-based symbols, fixed points omitted (wire format).
  std::vector<std::vector<int>> cycles() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = 1;
        continue;
      }
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        cyc.push_back(j + 1);
        j = img_[j];
      }
      out.push_back(cyc);
    }
    return out;
  }

  const std::vector<int>& images() const { return img_; }

private:
  std::vector<int> img_;
};

inline Permutation product(const std::vector<Permutation>& perms) {
  if (perms.empty()) throw error("empty permutation product");
  Permutation acc = perms[0];
  for (size_t i = 1; i < perms.size(); ++i) acc = acc * perms[i];
  return acc;
}

/// Orbit of symbol 0 under the generated group covers all symbols?
inline bool acts_transitively(const std::vector<Permutation>& gens, int degree) {
  if (degree <= 1) return true;
  std::vector<char> seen(degree, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      for (int w : {g(v), g.inverse()(v)}) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == degree;
}

/// All partitions of n, each weakly decreasing, in lexicographic order
/// starting from [n].
inline std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// All transpositions of S_d.
inline std::vector<Permutation> all_transpositions(int d) {
  std::vector<Permutation> out;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) out.push_back(Permutation::transposition(d, a, b));
  return out;
}

}  // namespace covertau

#endif
