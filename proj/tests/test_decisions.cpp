#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "perminv/decisions.hpp"
#include "perminv/error.hpp"
#include "perminv/molien.hpp"

using namespace perminv;
using perminv::testing::corpus;
using perminv::testing::corpus_group;
using perminv::testing::make_group;

namespace {

Polynomial one_minus_t_pow(int k) { return Polynomial::one() - Polynomial::term(1, k); }

const CharacteristicReport& at(const InvariantReport& r, std::uint64_t p) {
  for (const auto& cr : r.per_char) {
    if (cr.characteristic.p() == p) return cr;
  }
  throw std::out_of_range("characteristic missing from report");
}

}  // namespace

TEST_CASE("quasi_gorenstein examples") {
  const auto c4 = corpus_group("C4");
  CHECK_FALSE(quasi_gorenstein(c4, FieldChar(0)));
  CHECK(quasi_gorenstein(c4, FieldChar(2)));
  CHECK_FALSE(quasi_gorenstein(c4, FieldChar(3)));
  CHECK(quasi_gorenstein(corpus_group("A3"), FieldChar(0)));
  CHECK(quasi_gorenstein(corpus_group("D4"), FieldChar(0)));
}

TEST_CASE("splits examples") {
  const auto c2 = corpus_group("<(1 2)(3 4)(5 6)>");
  CHECK_FALSE(splits(c2, FieldChar(2)));
  CHECK(splits(c2, FieldChar(3)));
  for (const auto& entry : corpus()) CHECK(splits(make_group(entry), FieldChar(0)));
  CHECK(splits(corpus_group("C4"), FieldChar(3)));
  CHECK_FALSE(splits(corpus_group("C4"), FieldChar(2)));
  CHECK_FALSE(splits(corpus_group("A5"), FieldChar(5)));
}

TEST_CASE("transvection_count examples") {
  const auto s3 = corpus_group("S3");
  CHECK(transvection_count(s3, FieldChar(2)) == 3);
  CHECK(transvection_count(s3, FieldChar(5)) == 0);
  CHECK(transvection_count(corpus_group("A3"), FieldChar(2)) == 0);
}

TEST_CASE("is_invariant_ring_polynomial_for_N examples") {
  const auto s2s2 = corpus_group("S2xS2");
  auto v = is_invariant_ring_polynomial_for_N(s2s2);
  CHECK(v.polynomial);
  const auto block = one_minus_t_pow(1) * one_minus_t_pow(2);
  CHECK(v.hilbert_series == RationalFunction(Polynomial::one(), block * block));

  v = is_invariant_ring_polynomial_for_N(corpus_group("S4"));
  CHECK(v.hilbert_series == RationalFunction(Polynomial::one(), one_minus_t_pow(1) * one_minus_t_pow(2) *
                                                                    one_minus_t_pow(3) *
                                                                    one_minus_t_pow(4)));
  v = is_invariant_ring_polynomial_for_N(corpus_group("C4"));
  CHECK(v.hilbert_series == RationalFunction(Polynomial::one(), pow(one_minus_t_pow(1), 4)));
}

TEST_CASE("shank_wehlau_verdict examples") {
  CHECK(shank_wehlau_verdict(corpus_group("S2"), 2) == ShankWehlauVerdict{true, true, true});
  CHECK(shank_wehlau_verdict(corpus_group("<(1 2)(3 4)>"), 2) ==
        ShankWehlauVerdict{true, false, false});
  CHECK(shank_wehlau_verdict(corpus_group("A3"), 2) == ShankWehlauVerdict{false, true, false});
  CHECK_THROWS_AS(shank_wehlau_verdict(corpus_group("A3"), 4), InvalidArgument);
}

TEST_CASE("build_report examples") {
  const std::vector<FieldChar> chars = {FieldChar(0), FieldChar(2), FieldChar(3)};

  const auto c4 = build_report(corpus_group("C4"), chars, 6);
  CHECK(at(c4, 2).a_invariant == -4);
  CHECK(at(c4, 0).a_invariant == at(c4, 3).a_invariant);
  CHECK_FALSE(at(c4, 0).quasi_gorenstein);
  CHECK(at(c4, 2).quasi_gorenstein);
  CHECK_FALSE(at(c4, 3).quasi_gorenstein);
  CHECK(at(c4, 0).splits);
  CHECK_FALSE(at(c4, 2).splits);
  CHECK(at(c4, 3).splits);
  CHECK(at(c4, 0).gorenstein == false);
  CHECK_FALSE(at(c4, 2).gorenstein.has_value());

  const auto trivial = build_report(corpus_group("trivial"), chars, 4);
  for (const auto& cr : trivial.per_char) {
    CHECK(cr.quasi_gorenstein);
    CHECK(cr.splits);
    CHECK(cr.a_invariant == -3);
  }

  for (const auto* name : {"S2", "S3", "S4", "S5"}) {
    CAPTURE(name);
    const auto g = corpus_group(name);
    const int n = static_cast<int>(g.arity());
    const auto r = build_report(g, chars, 4);
    for (const auto& cr : r.per_char) {
      CHECK(cr.quasi_gorenstein);
      CHECK(cr.splits);
      CHECK(cr.a_invariant == -n * (n + 1) / 2);
    }
  }

  // Duplicates are dropped and the list comes back sorted.
  const std::vector<FieldChar> dup = {FieldChar(3), FieldChar(0), FieldChar(3)};
  const auto r = build_report(corpus_group("S2"), dup, 2);
  REQUIRE(r.per_char.size() == 2);
  CHECK(r.per_char[0].characteristic.p() == 0);
  CHECK_THROWS_AS(build_report(corpus_group("S2"), std::vector<FieldChar>{}, 2), InvalidArgument);
}

TEST_CASE("decision invariants over the corpus") {
  const std::vector<FieldChar> chars = {FieldChar(0), FieldChar(2), FieldChar(3), FieldChar(5)};
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto g = make_group(entry);
    const auto r = build_report(g, chars, 4);

    for (std::uint64_t p : {2, 3, 5}) {
      const auto sw = shank_wehlau_verdict(g, p);
      if (sw.is_p_group && sw.splits) CHECK(sw.polynomial);
    }
    bool all_split = true;
    for (std::uint64_t p : {2, 3, 5, 7}) all_split = all_split && splits(g, FieldChar(p));
    CHECK(all_split == (g.index_g_n() == 1));
    CHECK(r.uniformly_split == (g.index_g_n() == 1));
    CHECK(r.uniformly_split == r.generated_by_transpositions);

    CHECK(at(r, 2).quasi_gorenstein);
    CHECK(at(r, 0).quasi_gorenstein == at(r, 3).quasi_gorenstein);
    CHECK(at(r, 3).quasi_gorenstein == at(r, 5).quasi_gorenstein);
    if (g.transposition_count() == 0) {
      CHECK(at(r, 0).quasi_gorenstein == g.contained_in_alternating());
    }
  }
}
