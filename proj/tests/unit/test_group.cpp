#include "doctest.h"
#include "oracles.hpp"
#include "zsl/errors.hpp"
#include "zsl/group.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace zsl;

TEST_SUITE("group") {

TEST_CASE("invariant factor validation") {
  CHECK_THROWS_AS(AbelianGroup({2, 3}), DomainError);
  CHECK_THROWS_AS(AbelianGroup({1, 2}), DomainError);
  CHECK_NOTHROW(AbelianGroup({2, 4}));
  AbelianGroup t;
  CHECK(t.order() == 1);
  CHECK(t.to_string() == "Z1");
  CHECK(AbelianGroup({2, 6}).to_string() == "Z2xZ6");
}

TEST_CASE("index round trip, identity first") {
  for (auto g : {AbelianGroup({6}), AbelianGroup({2, 4}), AbelianGroup({3, 3})}) {
    CHECK(g.index_of(g.zero()) == 0);
    for (std::int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
    auto els = g.elements();
    CHECK(std::is_sorted(els.begin(), els.end()));
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(7);
  for (auto g : {AbelianGroup({12}), AbelianGroup({2, 6}), AbelianGroup({2, 2, 4})}) {
    std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
    for (int t = 0; t < 200; ++t) {
      auto x = g.element_at(pick(rng)), y = g.element_at(pick(rng)), z = g.element_at(pick(rng));
      CHECK(add(g, x, y) == add(g, y, x));
      CHECK(add(g, add(g, x, y), z) == add(g, x, add(g, y, z)));
      CHECK(add(g, x, negate(g, x)) == g.zero());
      CHECK(multiply(g, element_order(g, x), x) == g.zero());
      CHECK(g.exponent() % element_order(g, x) == 0);
    }
  }
}

TEST_CASE("cyclic product normalizes by CRT") {
  CyclicProduct cp({2, 3});
  CHECK(cp.group() == AbelianGroup({6}));
  CyclicProduct cq({4, 6});
  CHECK(cq.group() == AbelianGroup({2, 12}));
  // the coordinate map is an injective homomorphism
  std::set<GroupElement> seen;
  for (std::int64_t a = 0; a < 4; ++a)
    for (std::int64_t b = 0; b < 6; ++b) {
      std::vector<std::int64_t> c{a, b};
      seen.insert(cq.to_group(c));
      std::vector<std::int64_t> c2{(2 * a) % 4, (2 * b) % 6};
      CHECK(cq.to_group(c2) == add(cq.group(), cq.to_group(c), cq.to_group(c)));
    }
  CHECK(seen.size() == 24);
  CHECK(direct_sum(AbelianGroup({2}), AbelianGroup({2})) == AbelianGroup({2, 2}));
}

TEST_CASE("subgroup test") {
  CHECK(is_subgroup(AbelianGroup({2}), AbelianGroup({4})));
  CHECK_FALSE(is_subgroup(AbelianGroup({2, 2}), AbelianGroup({4})));
  CHECK(is_subgroup(AbelianGroup({2, 2}), AbelianGroup({2, 4})));
  CHECK(is_subgroup(AbelianGroup({3}), AbelianGroup({6})));
}

TEST_CASE("automorphism count matches permutation brute force") {
  for (auto g : {AbelianGroup({5}), AbelianGroup({6}), AbelianGroup({8}), AbelianGroup({2, 2}),
                 AbelianGroup({2, 4})}) {
    CAPTURE(g.to_string());
    CHECK(automorphism_group(g).size() == oracle::automorphism_count(g));
  }
}

TEST_CASE("automorphisms are closed under composition") {
  AbelianGroup g({2, 4});
  auto auts = automorphism_group(g);
  for (const auto& a : auts)
    for (const auto& b : auts) {
      auto c = compose(g, a, b);
      CHECK(std::find(auts.begin(), auts.end(), c) != auts.end());
    }
}

TEST_CASE("automorphism capacity") {
  SearchLimits tight;
  tight.max_automorphisms = 3;
  CHECK_THROWS_AS(automorphism_group(AbelianGroup({2, 2}), tight), CapacityError);
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK(smallest_prime_divisor(15) == 3);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(power_mod(3, 4, 5) == 1);
}

TEST_CASE("semidirect group") {
  CHECK_THROWS_AS(SemidirectGroup(3, 2, 1), ValidationError);  // e must have order d
  CHECK_THROWS_AS(SemidirectGroup(4, 2, 3), ValidationError);
  SemidirectGroup g(7, 3, 2);
  auto els = semidirect_elements(g);
  CHECK(els.size() == 21);
  for (auto x : els) {
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
    for (auto y : els) {
      for (auto z : {els[1], els[8]}) {
        CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
      }
    }
  }
  // non-abelian
  CHECK(g.multiply({1, 0}, {0, 1}) != g.multiply({0, 1}, {1, 0}));
  CHECK(g.to_string() == "SD(7,3,2)");
}

}
