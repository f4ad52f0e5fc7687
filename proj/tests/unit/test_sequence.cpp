#include "doctest.h"
#include "oracles.hpp"
#include "zsl/errors.hpp"
#include "zsl/kmax_engine.hpp"
#include "zsl/sequence.hpp"

#include <random>

using namespace zsl;

namespace {

Sequence random_sequence(std::mt19937_64& rng, const AbelianGroup& g, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
  Sequence s(g);
  for (int n = len(rng); n > 0; --n) s.insert(g.element_at(pick(rng)));
  return s;
}

const std::vector<AbelianGroup> kSmall = {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}),
                                          AbelianGroup({5}), AbelianGroup({6}), AbelianGroup({2, 2}),
                                          AbelianGroup({2, 4}), AbelianGroup({3, 3})};

}  // namespace

TEST_SUITE("sequence") {

TEST_CASE("parse and print") {
  AbelianGroup z5({5});
  auto s = parse_sequence("[1,1,3]", z5);
  CHECK(s.length() == 3);
  CHECK(s.to_string() == "[1,1,3]");
  CHECK(is_zero_sum(s));
  AbelianGroup k({2, 2});
  auto t = parse_sequence("[(1,0),(0,1),(1,1)]", k);
  CHECK(t.to_string() == "[(0,1),(1,0),(1,1)]");
  CHECK(is_zero_sum(t));
  CHECK(parse_sequence("[7]", z5).to_string() == "[2]");
  CHECK_THROWS_AS(parse_sequence("[1,", z5), ParseError);
}

TEST_CASE("multiset operations") {
  AbelianGroup z4({4});
  auto s = parse_sequence("[1,2,2,3]", z4);
  auto t = parse_sequence("[2,3]", z4);
  CHECK(divides(t, s));
  CHECK(difference(s, t).to_string() == "[1,2]");
  CHECK(concat(t, t).length() == 4);
  CHECK_THROWS_AS(s.remove(z4.element({0})), DomainError);
  CHECK(Sequence::from_counts(z4, s.counts()) == s);
}

TEST_CASE("minimal zero-sum subsequences") {
  AbelianGroup z3({3});
  auto s = parse_sequence("[1,1,1,2]", z3);
  auto m = minimal_zero_sum_subsequences(s);
  REQUIRE(m.size() == 2);
  CHECK(m[0].to_string() == "[1,1,1]");
  CHECK(m[1].to_string() == "[1,2]");
}

TEST_CASE("k_max small cases") {
  AbelianGroup z2({2});
  CHECK(k_max(parse_sequence("[1,1,1]", z2)) == 1);
  CHECK(k_max(parse_sequence("[0,0,1,1]", z2)) == 3);
  CHECK(k_max(Sequence(z2)) == 0);
  AbelianGroup k({2, 2});
  CHECK(k_max(parse_sequence("[(0,1),(1,0),(1,1),(1,1)]", k)) == 1);
}

TEST_CASE("k_max witness is a valid packing of the claimed size") {
  std::mt19937_64 rng(11);
  for (const auto& g : kSmall) {
    for (int t = 0; t < 30; ++t) {
      auto s = random_sequence(rng, g, 8);
      auto r = k_max_with_witness(s);
      CHECK(is_valid_packing(s, r.witness));
      CHECK(r.witness.blocks.size() == r.value);
    }
  }
}

TEST_CASE("property: memoized k_max equals bitmask oracle") {
  std::mt19937_64 rng(20240601);
  int compared = 0;
  for (int t = 0; t < 400; ++t) {
    const auto& g = kSmall[static_cast<std::size_t>(t) % kSmall.size()];
    auto s = random_sequence(rng, g, 9);
    CAPTURE(s.to_string());
    CHECK(k_max(s) == static_cast<std::size_t>(oracle::kmax(s)));
    CHECK(k_max_reference(s) == static_cast<std::size_t>(oracle::kmax(s)));
    ++compared;
  }
  CHECK(compared == 400);
}

TEST_CASE("property: k_max superadditive under concatenation") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const auto& g = kSmall[static_cast<std::size_t>(t) % kSmall.size()];
    auto a = random_sequence(rng, g, 5), b = random_sequence(rng, g, 5);
    CHECK(k_max(concat(a, b)) >= k_max(a) + k_max(b));
    // removing one element loses at most one block
    if (!a.empty()) {
      Sequence one(g);
      one.insert(a.elements().front());
      auto k = k_max(a);
      auto k2 = k_max(difference(a, one));
      CHECK(k2 <= k);
      CHECK(k2 + 1 >= k);
    }
  }
}

TEST_CASE("property: k_max invariant on automorphism orbits") {
  std::mt19937_64 rng(5);
  for (const auto& g : {AbelianGroup({5}), AbelianGroup({6}), AbelianGroup({2, 2}),
                        AbelianGroup({2, 4}), AbelianGroup({3, 3})}) {
    auto auts = automorphism_group(g);
    for (int t = 0; t < 15; ++t) {
      auto s = random_sequence(rng, g, 7);
      auto canon = canonical_form(s, auts);
      const auto k = k_max(s);
      CHECK(k_max(canon) == k);
      for (const auto& a : auts) {
        Sequence img(g);
        for (const auto& x : s.elements()) img.insert(a.apply(g, x));
        CHECK(oracle::kmax(img) == static_cast<int>(k));
        CHECK(canonical_form(img, auts) == canon);
        CHECK_FALSE(encoding_less(img, canon));
      }
    }
  }
}

TEST_CASE("engine short zero-sum query") {
  AbelianGroup z5({5});
  KmaxEngine engine(z5);
  auto s = parse_sequence("[1,1,1,1,1]", z5);
  CHECK(engine.has_zero_sum_of_length_at_most(s.counts(), 5));
  CHECK_FALSE(engine.has_zero_sum_of_length_at_most(s.counts(), 4));
  auto blocks = engine.packing(parse_sequence("[1,4,2,3,0]", z5).counts());
  CHECK(blocks.size() == 3);
}

}
