#include "doctest.h"
#include "oracles.hpp"
#include "zsl/errors.hpp"
#include "zsl/invariants.hpp"

using namespace zsl;

namespace {

// Zero-sum multisets of length d, i.e. invariant monomials of the regular
// representation in degree d.
std::size_t zero_sum_multisets(const AbelianGroup& g, int d) {
  std::size_t n = 0;
  oracle::for_each_multiset(g.order(), d, [&](const std::vector<std::int64_t>& idx) {
    GroupElement acc = g.zero();
    for (auto i : idx) acc = add(g, acc, g.element_at(i));
    if (acc == g.zero()) ++n;
  });
  return n;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("composition of monomial actions") {
  MonomialAction swap{{1, 0}, {0, 0}}, scale{{0, 1}, {1, 2}};
  auto a = compose(swap, scale, 3);
  // x0 -> x1 -> z^2 x1 ; x1 -> x0 -> z x0
  CHECK(a.perm == std::vector<std::size_t>{1, 0});
  CHECK(a.scalars == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("closure must match declared order") {
  MonomialAction s{{0}, {1}};
  CHECK_NOTHROW(MonomialRep(1, 3, {s}, 3));
  CHECK_THROWS(MonomialRep(1, 3, {s}, 6));
}

TEST_CASE("regular representation invariant dimensions") {
  for (auto g : {AbelianGroup({3}), AbelianGroup({4}), AbelianGroup({2, 2})}) {
    auto rep = regular_representation(g);
    CHECK(rep.group_order() == g.order());
    for (int d = 1; d <= 4; ++d) {
      CAPTURE(g.to_string());
      CAPTURE(d);
      auto basis = invariant_basis(rep, d);
      CHECK(basis.dimension() == zero_sum_multisets(g, d));
      for (const auto& f : basis.basis()) CHECK(rep.is_invariant(f));
    }
  }
}

TEST_CASE("transfer is invariant and fixes invariants up to |G|") {
  auto rep = induced_module(SemidirectGroup(7, 3, 2));
  CHECK(rep.group_order() == 21);
  auto x = MultiPoly::monomial(3, 7, Exponents{2, 1, 0});
  auto t = transfer(rep, x);
  CHECK(rep.is_invariant(t));
  auto tt = transfer(rep, t);
  CHECK(tt == t.scaled(CyclotomicNumber(7, 21L)));
  for (const auto& f : invariant_spanning_set(rep, 3)) CHECK(rep.is_invariant(f));
}

TEST_CASE("beta_k of regular representations matches the monomial oracle") {
  for (auto [g, k] : std::vector<std::pair<AbelianGroup, int>>{
           {AbelianGroup({2}), 1}, {AbelianGroup({2}), 2}, {AbelianGroup({3}), 1},
           {AbelianGroup({3}), 2}, {AbelianGroup({2, 2}), 1}, {AbelianGroup({4}), 1}}) {
    CAPTURE(g.to_string());
    CAPTURE(k);
    auto r = beta_k(regular_representation(g), k);
    CHECK(r.value == oracle::beta_regular(g, k, static_cast<int>(k * g.order() + 1)));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->degree() == r.value);
  }
}

TEST_CASE("beta equals Davenport cross check") {
  auto r = verify_beta_equals_davenport(AbelianGroup({3}), 2);
  CHECK(r.passed);
  CHECK(r.beta == 6);
}

TEST_CASE("f_k family for SD(3,2,2)") {
  auto fam = construct_fk(SemidirectGroup(3, 2, 2));
  REQUIRE(fam.f.size() == 2);
  CHECK(fam.rep.format(fam.f[0]) == "x1^3 + x2^3");
  CHECK(fam.rep.format(fam.f[1]) == "2*x1*x2");
  for (const auto& f : fam.f) CHECK(fam.rep.is_invariant(f));
}

TEST_CASE("sigma for Z_p x| Z_d") {
  for (auto g : {SemidirectGroup(3, 2, 2), SemidirectGroup(5, 2, 4), SemidirectGroup(5, 4, 2),
                 SemidirectGroup(7, 3, 2)}) {
    auto r = verify_sigma_zpzd(g);
    CAPTURE(g.to_string());
    CHECK(r.passed);
    CHECK(r.sigma == g.p());
    CHECK(r.restrictions.size() == (std::size_t{1} << g.d()) - 1);
    for (const auto& s : r.restrictions) {
      CHECK(s.nonvanishing);
      CHECK(s.c_divides_d == (s.c != 0 && g.d() % s.c == 0));
    }
  }
}

TEST_CASE("property: f_k restricted to a support keeps the support's monomials") {
  auto fam = construct_fk(SemidirectGroup(5, 4, 2));
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < 4; ++i)
        if (mask & (1u << i)) vars.push_back(i);
      auto r = restrict_to_support(fam.f[k - 1], vars);
      if (vars.size() < k) {
        CHECK(r.is_zero());
      } else {
        for (const auto& [e, c] : r.terms()) {
          for (std::size_t i = 0; i < 4; ++i)
            if (!(mask & (1u << i))) CHECK(e[i] == 0);
        }
        if (vars.size() == k) CHECK_FALSE(r.is_zero());
      }
    }
  }
}

TEST_CASE("sigma for Z_n x| Z_2") {
  for (std::int64_t n = 3; n <= 8; ++n)
    for (std::int64_t e = 2; e <= n; ++e) {
      if (n % e) continue;
      auto r = verify_sigma_az2(n, e);
      CAPTURE(n);
      CAPTURE(e);
      CHECK(r.passed);
      CHECK(r.bound == e);
    }
  CHECK_THROWS(verify_sigma_az2(6, 4));
  CHECK_THROWS(verify_sigma_az2(1, 1));
}

}
