#include <catch2/catch_amalgamated.hpp>

#include "covertau/hodge.hpp"

using namespace covertau;

TEST_CASE("stratum coefficients, small cases") {
  REQUIRE(stratum_coefficient(2, 2, 2, RamificationProfile({1, 1})).value == Rational(1, 5));
  REQUIRE(stratum_coefficient(2, 2, 3, RamificationProfile({2})).value == Rational(1, 5));
  REQUIRE(stratum_coefficient(0, 3, 2, RamificationProfile({3})).value == Rational(-1, 6));
}

TEST_CASE("hodge table g=2 d=2") {
  auto table = hodge_table(2, 2);
  REQUIRE(table.size() == 2);
  for (const auto& c : table) REQUIRE(c.value == Rational(1, 5));
}

TEST_CASE("hodge table g=0 d=2 empty") {
  REQUIRE(hodge_table(0, 2).empty());
}

TEST_CASE("d=2, mu=[1,1] entries have vanishing second summand") {
  // d - sum 1/m_i = 0, so the value must be k(n-k)/(8(n-1)) exactly.
  for (int g = 2; g <= 8; ++g) {
    long long n = 2 * g + 2;
    for (int i = 1; 2 * i <= g + 1; ++i) {
      auto c = stratum_coefficient(g, 2, 2 * i, RamificationProfile({1, 1}));
      REQUIRE(c.value == Rational(2LL * i * (n - 2 * i), 8 * (n - 1)));
    }
  }
}

TEST_CASE("second summand vanishes exactly iff mu = [1^d]") {
  for (int d = 2; d <= 7; ++d) {
    for (const auto& mu : partitions_of(d)) {
      Rational inv_sum = 0;
      for (int m : mu) inv_sum += Rational(1, m);
      bool all_ones = std::all_of(mu.begin(), mu.end(), [](int m) { return m == 1; });
      REQUIRE(((Rational(d) - inv_sum) == 0) == all_ones);
    }
  }
}

TEST_CASE("Cornalba-Harris closed form holds exactly for all g <= 20") {
  for (int g = 2; g <= 20; ++g) {
    auto report = check_d2_closed_form(g);
    REQUIRE(report.pass);
    for (const auto& e : report.entries) REQUIRE(e.from_formula == e.closed_form);
  }
}

TEST_CASE("check_d2_closed_form g=3 entry i=2") {
  auto report = check_d2_closed_form(3);
  bool seen = false;
  for (const auto& e : report.entries) {
    if (e.k == 4 && e.mu == "[1,1]") {
      REQUIRE(e.from_formula == Rational(2, 7));
      seen = true;
    }
  }
  REQUIRE(seen);
  REQUIRE_FALSE(report.caveat.empty());
}

TEST_CASE("genus-0 k=2 scaled vector equals (d-6, -6, 3(d-2)) for 4 <= d <= 40") {
  for (int d = 4; d <= 40; ++d) {
    auto r = genus0_k2_vector(d);
    REQUIRE(r.scaled[0] == Rational(d - 6));
    REQUIRE(r.scaled[1] == Rational(-6));
    REQUIRE(r.scaled[2] == Rational(3 * (d - 2)));
    REQUIRE(r.lz == std::vector<long long>{d - 6, -3, 3LL * (d - 2)});
    REQUIRE_FALSE(r.multiplicity_note.empty());
  }
}

TEST_CASE("genus-0 vector small-d spot values") {
  REQUIRE(genus0_k2_vector(6).c3 == 0);
  REQUIRE(genus0_k2_vector(4).c1 == Rational(1, 5));
}

TEST_CASE("genus0_k2_vector rejects d < 4") {
  REQUIRE_THROWS(genus0_k2_vector(3));
}

TEST_CASE("realizability annotation") {
  auto table = hodge_table(2, 2, true);
  for (const auto& c : table) {
    REQUIRE(c.realizable.has_value());
    REQUIRE(*c.realizable);
    REQUIRE_FALSE(c.aut.has_value());  // nodal automorphisms not computed
  }
}
