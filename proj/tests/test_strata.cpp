#include <catch2/catch_amalgamated.hpp>

#include "covertau/strata.hpp"

using namespace covertau;

namespace {

bool has_stratum(const std::vector<BoundaryStratum>& strata, int k, std::vector<int> mu) {
  for (const auto& s : strata)
    if (s.k == k && s.profile.parts == mu) return true;
  return false;
}

}  // namespace

TEST_CASE("enumerate_strata g=2 d=2") {
  auto strata = enumerate_strata(2, 2);
  REQUIRE(strata.size() == 2);
  REQUIRE(has_stratum(strata, 2, {1, 1}));
  REQUIRE(has_stratum(strata, 3, {2}));
}

TEST_CASE("enumerate_strata g=0 d=2 is empty") {
  REQUIRE(enumerate_strata(0, 2).empty());
}

TEST_CASE("enumerate_strata g=0 d=3 parity filter") {
  auto strata = enumerate_strata(0, 3);
  REQUIRE(has_stratum(strata, 2, {3}));
  REQUIRE(has_stratum(strata, 2, {1, 1, 1}));
  REQUIRE_FALSE(has_stratum(strata, 2, {2, 1}));
}

TEST_CASE("stratum invariants") {
  for (auto [g, d] : {std::pair{0, 3}, {0, 4}, {1, 3}, {2, 2}, {1, 4}}) {
    for (const auto& s : enumerate_strata(g, d)) {
      long long prod = 1;
      for (int m : s.profile.parts) prod *= m;
      REQUIRE(s.branch_count * s.lcm == prod);
      REQUIRE(s.branch_count >= 1);
      REQUIRE(s.k >= 2);
      REQUIRE(s.k <= g + d - 1);
    }
  }
}

TEST_CASE("stratum constructor rejects invalid data") {
  REQUIRE_THROWS(BoundaryStratum(0, 2, 2, RamificationProfile({1, 1})));  // k range empty
  REQUIRE_THROWS_WITH(BoundaryStratum(0, 3, 2, RamificationProfile({2, 1})),
                      "parity constraint violated");
}

TEST_CASE("stratum_realizable examples") {
  REQUIRE(stratum_realizable(0, 3, BoundaryStratum(0, 3, 2, RamificationProfile({3}))));
  REQUIRE(stratum_realizable(2, 2, BoundaryStratum(2, 2, 2, RamificationProfile({1, 1}))));
}

TEST_CASE("parity-enumerated strata match brute-force realizability") {
  for (auto [g, d] : {std::pair{0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 2}}) {
    for (const auto& s : enumerate_strata(g, d)) {
      INFO("g=" << g << " d=" << d << " k=" << s.k);
      REQUIRE(stratum_realizable(g, d, s));
    }
  }
}

TEST_CASE("search budget guard") {
  REQUIRE_THROWS_WITH(
      stratum_realizable(2, 4, BoundaryStratum(2, 4, 2, RamificationProfile({3, 1})), true, 3),
      "search budget exceeded");
}
