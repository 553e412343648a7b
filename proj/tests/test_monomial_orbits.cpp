#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <set>

#include "corpus.hpp"
#include "perminv/error.hpp"
#include "perminv/monomial_orbits.hpp"

using namespace perminv;
using perminv::testing::corpus;
using perminv::testing::corpus_group;
using perminv::testing::make_group;

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial{std::vector<int>(e)}; }

}  // namespace

TEST_CASE("enumerate_monomials") {
  const auto two = enumerate_monomials(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == mono({2, 0}));
  CHECK(two[1] == mono({1, 1}));
  CHECK(two[2] == mono({0, 2}));

  const auto zero = enumerate_monomials(3, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == mono({0, 0, 0}));

  CHECK(enumerate_monomials(3, 2).size() == 6);
  CHECK(enumerate_monomials(1, 7).size() == 1);

  for (std::size_t n = 1; n <= 5; ++n) {
    for (int d = 0; d <= 6; ++d) {
      const auto ms = enumerate_monomials(n, d);
      CHECK(ms.size() == monomial_count(n, d));
      CHECK(std::is_sorted(ms.rbegin(), ms.rend()));
      CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
      for (const auto& m : ms) CHECK(m.degree() == d);
    }
  }

  Limits tight;
  tight.max_monomials = 5;
  CHECK_THROWS_AS(enumerate_monomials(3, 2, tight), CapExceeded);
  CHECK(monomial_count(3, 4) == 15);
  CHECK(monomial_count(12, 66) == 6681687099710ull);  // C(77, 11)
  CHECK(monomial_count(12, 1'000'000'000) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("act follows x_i -> x_sigma(i)") {
  // (1 2 3) sends x1 to x2, so x1^2 x2 -> x2^2 x3.
  CHECK(act(parse_cycles("(1 2 3)", 3), mono({2, 1, 0})) == mono({0, 2, 1}));
}

TEST_CASE("stabilizer_of") {
  const auto s2 = corpus_group("S2");
  CHECK(stabilizer_of(mono({1, 1}), s2).size() == 2);
  CHECK(stabilizer_of(mono({1, 0}), s2).size() == 1);
  const auto s3 = corpus_group("S3");
  const auto st = stabilizer_of(mono({2, 1, 0}), s3);
  REQUIRE(st.size() == 1);
  CHECK(st[0].is_identity());
}

TEST_CASE("is_chi_good") {
  const auto s2 = corpus_group("S2");
  CHECK_FALSE(is_chi_good(mono({1, 1}), s2, sign_character(s2)));
  CHECK(is_chi_good(mono({1, 0}), s2, sign_character(s2)));
  CHECK(is_chi_good(mono({1, 1}), s2, trivial_character(s2)));
}

TEST_CASE("orbit_decompose examples") {
  const auto a3 = corpus_group("A3");
  const auto triv = trivial_character(a3);
  auto orbits = orbit_decompose(a3, 2, triv);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].representative == mono({2, 0, 0}));
  CHECK(orbits[1].representative == mono({1, 1, 0}));
  CHECK(orbits[0].good);
  CHECK(orbits[1].good);

  orbits = orbit_decompose(a3, 3, triv);
  REQUIRE(orbits.size() == 4);
  CHECK(orbits[0].representative == mono({3, 0, 0}));
  CHECK(orbits[1].representative == mono({2, 1, 0}));
  CHECK(orbits[2].representative == mono({2, 0, 1}));
  CHECK(orbits[3].representative == mono({1, 1, 1}));
  CHECK(orbits[3].size == 1);

  const auto trivial = corpus_group("trivial");
  for (int d = 0; d <= 4; ++d) {
    orbits = orbit_decompose(trivial, d, sign_character(trivial));
    CHECK(orbits.size() == monomial_count(3, d));
  }
}

TEST_CASE("count_good_orbits examples") {
  const auto s2 = corpus_group("S2");
  CHECK(count_good_orbits(s2, sign_character(s2), 0) == 0);
  CHECK(count_good_orbits(s2, sign_character(s2), 1) == 1);
  CHECK(count_good_orbits(s2, sign_character(s2), 2) == 1);
  CHECK(count_good_orbits(s2, trivial_character(s2), 2) == 2);
  for (const auto* name : {"A3", "A4", "A5", "<(1 2)(3 4)>"}) {
    const auto g = corpus_group(name);
    CHECK(count_good_orbits(g, sign_character(g), 0) == 1);
  }
}

TEST_CASE("min_good_degree examples") {
  const auto s3 = corpus_group("S3");
  CHECK(min_good_degree(s3, sign_character(s3)) == 3);
  const auto s2 = corpus_group("S2");
  CHECK(min_good_degree(s2, sign_character(s2)) == 1);
  for (const auto* name : {"A3", "A4", "A5"}) {
    const auto g = corpus_group(name);
    CHECK(min_good_degree(g, sign_character(g)) == 0);
  }
  // Staircase degree for S_n.
  const auto s5 = corpus_group("S5");
  CHECK(min_good_degree(s5, sign_character(s5)) == 10);
}

TEST_CASE("orbit invariants over the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto g = make_group(entry);
    const auto sign = sign_character(g);
    const auto triv = trivial_character(g);
    const int n = static_cast<int>(g.arity());
    for (int d = 0; d <= 5; ++d) {
      CAPTURE(d);
      const auto orbits = orbit_decompose(g, d, sign);
      std::uint64_t total = 0;
      std::set<std::vector<int>> covered;
      for (const auto& o : orbits) {
        CHECK(g.order() % o.size == 0);
        total += o.size;
        // Goodness does not depend on the representative.
        for (const auto& s : g.elements()) {
          const auto image = act(s, o.representative);
          CHECK(is_chi_good(image, g, sign) == o.good);
          CHECK(image <= o.representative);
          covered.insert(image.exponents);
        }
      }
      CHECK(total == monomial_count(g.arity(), d));
      CHECK(covered.size() == total);
      CHECK(count_good_orbits(g, triv, d) == orbit_decompose(g, d, triv).size());
      if (g.contained_in_alternating()) {
        CHECK(count_good_orbits(g, sign, d) == orbits.size());
      }
    }
    if (n <= 5) CHECK(count_good_orbits(g, sign, n * (n - 1) / 2) >= 1);
  }
}
