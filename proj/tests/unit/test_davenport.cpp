#include <bit>

#include "doctest.h"
#include "oracles.hpp"
#include "zsl/davenport.hpp"
#include "zsl/errors.hpp"

using namespace zsl;

namespace {

// Least l such that every length-l multiset has a non-empty zero-sum
// sub-multiset of length <= exp(A).
int eta_oracle(const AbelianGroup& g) {
  const auto ex = g.exponent();
  for (int n = 1;; ++n) {
    bool all = true;
    oracle::for_each_multiset(g.order(), n, [&](const std::vector<std::int64_t>& idx) {
      if (!all) return;
      bool found = false;
      const std::uint32_t full = (1u << n) - 1;
      for (std::uint32_t m = 1; m <= full && !found; ++m) {
        if (std::popcount(m) > ex) continue;
        GroupElement acc = g.zero();
        for (int i = 0; i < n; ++i)
          if (m & (1u << i)) acc = add(g, acc, g.element_at(idx[static_cast<std::size_t>(i)]));
        found = acc == g.zero();
      }
      all = found;
    });
    if (all) return n;
  }
}

}  // namespace

TEST_SUITE("davenport") {

TEST_CASE("D_1 against exhaustive oracle") {
  for (auto g : {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({5}),
                 AbelianGroup({6}), AbelianGroup({7}), AbelianGroup({2, 2}), AbelianGroup({2, 4}),
                 AbelianGroup({3, 3})}) {
    CAPTURE(g.to_string());
    auto r = davenport_k(g, 1);
    CHECK(r.value_Dk == oracle::davenport(g, 1));
    CHECK(r.value_dk == r.value_Dk - 1);
  }
}

TEST_CASE("D_k for k > 1 against exhaustive oracle") {
  DavenportCache cache;
  for (auto [g, kmax] : std::vector<std::pair<AbelianGroup, int>>{
           {AbelianGroup({2}), 4}, {AbelianGroup({3}), 3}, {AbelianGroup({4}), 2},
           {AbelianGroup({2, 2}), 3}, {AbelianGroup({5}), 2}}) {
    for (int k = 2; k <= kmax; ++k) {
      CAPTURE(g.to_string());
      CAPTURE(k);
      CHECK(cache.davenport_k(g, k).value_Dk == oracle::davenport(g, k));
    }
  }
}

TEST_CASE("extremal witnesses") {
  DavenportCache cache;
  for (auto g : {AbelianGroup({4}), AbelianGroup({2, 2}), AbelianGroup({2, 4}), AbelianGroup({3, 3}),
                 AbelianGroup({6})}) {
    for (int k = 1; k <= 3; ++k) {
      auto r = cache.davenport_k(g, k);
      CAPTURE(g.to_string());
      CHECK(static_cast<std::int64_t>(r.extremal_witness.length()) == r.value_dk);
      CHECK(oracle::kmax(r.extremal_witness) <= k - 1);
    }
  }
}

TEST_CASE("trivial group and argument checks") {
  AbelianGroup t;
  CHECK(davenport_k(t, 3).value_Dk == 3);
  CHECK_THROWS_AS(davenport_k(AbelianGroup({2}), 0), DomainError);
  SearchLimits small;
  small.max_group_order = 8;
  CHECK_THROWS_AS(davenport_k(AbelianGroup({3, 3}), 1, small), CapacityError);
}

TEST_CASE("eta against oracle") {
  for (auto g : {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({6}),
                 AbelianGroup({2, 2}), AbelianGroup({3, 3})}) {
    CAPTURE(g.to_string());
    CHECK(eta(g) == eta_oracle(g));
  }
}

TEST_CASE("sigma of abelian groups is the exponent") {
  CHECK(sigma_abelian(AbelianGroup({2, 4})) == 4);
  CHECK(sigma_abelian(AbelianGroup({6})) == 6);
  AbelianGroup z6({6});
  std::vector<GroupElement> chars{z6.element({2}), z6.element({3})};
  CHECK(sigma_diagonal(z6, chars) == 3);
}

TEST_CASE("linearity profiles") {
  for (auto g : {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({2, 2})}) {
    auto p = linearity_profile(g, 4);
    CAPTURE(g.to_string());
    CHECK(p.slope == g.exponent());
    CHECK(p.stabilized);
    CHECK(p.k0 >= 1);
    for (int k = p.k0; k < 4; ++k) CHECK(p.D(k + 1) - p.D(k) == p.slope);
    CHECK(verify_inequalities(p).passed());
  }
}

TEST_CASE("property: D_k monotone and bounded by scaled rows") {
  DavenportCache cache;
  for (auto g : {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({5}),
                 AbelianGroup({2, 2}), AbelianGroup({6})}) {
    std::vector<std::int64_t> D{0};
    for (int k = 1; k <= 4; ++k) D.push_back(cache.davenport_k(g, k).value_Dk);
    for (int a = 1; a <= 4; ++a) {
      CHECK(D[static_cast<std::size_t>(a)] >= a * g.exponent());
      CHECK(D[static_cast<std::size_t>(a)] <= a * D[1]);
      if (a < 4) CHECK(D[static_cast<std::size_t>(a + 1)] > D[static_cast<std::size_t>(a)]);
      for (int r = 1; r <= a; ++r) {
        CHECK(r * D[static_cast<std::size_t>(a)] <= a * D[static_cast<std::size_t>(r)]);
      }
    }
  }
}

TEST_CASE("inequality checker catches a bad table") {
  LinearityProfile p;
  p.group = AbelianGroup({2});
  p.slope = 2;
  p.table = {{1, 2}, {2, 3}, {3, 6}};
  CHECK_FALSE(verify_inequalities(p).passed());
  CHECK_FALSE(verify_inequalities(p).failures().empty());
}

TEST_CASE("subgroup relations") {
  std::vector<int> ks{1, 2};
  CHECK(verify_subgroup_relations(AbelianGroup({4}), AbelianGroup({2}), ks).passed());
  CHECK(verify_subgroup_relations(AbelianGroup({6}), AbelianGroup({3}), ks).passed());
  CHECK(verify_subgroup_relations(AbelianGroup({2, 2}), AbelianGroup({2}), ks).passed());
}

}
