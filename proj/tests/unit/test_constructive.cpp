#include "doctest.h"
#include "oracles.hpp"
#include "zsl/constructive.hpp"
#include "zsl/errors.hpp"

using namespace zsl;

TEST_SUITE("constructive") {

TEST_CASE("prescribed support: exhaustive for small primes") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::uint32_t mask = 1; mask < (1u << (p - 1)); ++mask) {
      std::vector<std::int64_t> s;
      for (std::int64_t i = 1; i < p; ++i)
        if (mask & (1u << (i - 1))) s.push_back(i);
      auto r = zero_sum_with_support(p, s);
      CAPTURE(p);
      CAPTURE(r.sequence.to_string());
      CHECK(is_zero_sum(r.sequence));
      CHECK(static_cast<std::int64_t>(r.sequence.length()) <= p);
      std::vector<std::int64_t> supp;
      for (const auto& x : r.sequence.support()) supp.push_back(x.coords[0]);
      CHECK(supp == s);
      CHECK(support_lemma_claims_hold(r));
    }
  }
}

TEST_CASE("prescribed support: worked instance") {
  std::vector<std::int64_t> s{1, 3};
  auto r = zero_sum_with_support(5, s);
  // 1 + 3 = 4; n*1 = 1 gives n = 1, n*3 = 1 gives n = 2
  CHECK(r.n_values == std::vector<std::int64_t>{1, 2});
  CHECK(r.n_min == 1);
  CHECK(r.raised_element == 1);
  CHECK(r.sequence.to_string() == "[1,1,3]");
}

TEST_CASE("prescribed support: bad input") {
  std::vector<std::int64_t> dup{1, 1}, zero{0, 2}, empty;
  CHECK_THROWS_AS(zero_sum_with_support(6, std::vector<std::int64_t>{1}), DomainError);
  CHECK_THROWS_AS(zero_sum_with_support(5, dup), DomainError);
  CHECK_THROWS_AS(zero_sum_with_support(5, zero), DomainError);
  CHECK_THROWS_AS(zero_sum_with_support(5, empty), DomainError);
}

TEST_CASE("direct product witness") {
  AbelianGroup z2({2}), z3({3});
  auto w = direct_product_witness(parse_sequence("[1]", z2), parse_sequence("[1,1]", z3));
  CHECK(w.group == AbelianGroup({6}));
  CHECK(w.sequence.length() == 3);
  CHECK(oracle::kmax(w.sequence) == 0);
}

TEST_CASE("direct product bound") {
  DavenportCache cache;
  for (auto [g, h] : std::vector<std::pair<AbelianGroup, AbelianGroup>>{
           {AbelianGroup({2}), AbelianGroup({2})}, {AbelianGroup({2}), AbelianGroup({3})},
           {AbelianGroup({3}), AbelianGroup({3})}}) {
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s) {
        auto rep = verify_direct_product_bound(g, h, r, s, cache);
        CHECK(rep.passed);
        CHECK(rep.witness_ok);
        CHECK(rep.lhs >= rep.rhs);
        CHECK(oracle::kmax(rep.witness.sequence) <= r + s - 2);
        CHECK(static_cast<std::int64_t>(rep.witness.sequence.length()) == rep.rhs - 1);
      }
  }
  auto tight = verify_direct_product_bound(AbelianGroup({2}), AbelianGroup({2}), 1, 2, cache);
  CHECK(tight.lhs == 5);
  CHECK(tight.rhs == 5);
  CHECK(tight.tight);
}

}
