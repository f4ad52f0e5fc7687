#include "doctest.h"
#include "oracles.hpp"
#include "zsl/errors.hpp"
#include "zsl/graded_ring.hpp"

#include <map>

using namespace zsl;

namespace {

// Q[a,b] / (b^3 - a^9, a*b^2 - a^7) with deg a = 1, deg b = 3, done with
// plain rational matrices over the monomials a^i b^j, i + 3j = d.
struct ExampleOracle {
  using Mono = std::pair<int, int>;
  using Poly = std::map<Mono, mpq_class>;

  static std::vector<Mono> monos(int d) {
    std::vector<Mono> out;
    for (int j = 0; 3 * j <= d; ++j) out.push_back({d - 3 * j, j});
    return out;
  }

  static std::vector<Poly> ideal(int d) {
    std::vector<Poly> out;
    const std::vector<std::pair<int, Poly>> rels = {
        {9, {{{0, 3}, 1}, {{9, 0}, -1}}},
        {7, {{{1, 2}, 1}, {{7, 0}, -1}}}};
    for (const auto& [deg, rel] : rels) {
      if (deg > d) continue;
      for (auto [i, j] : monos(d - deg)) {
        Poly p;
        for (const auto& [m, c] : rel) p[{m.first + i, m.second + j}] += c;
        out.push_back(p);
      }
    }
    return out;
  }

  static std::size_t rank_of(int d, const std::vector<Poly>& polys) {
    const auto ms = monos(d);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& p : polys) {
      std::vector<mpq_class> r;
      for (const auto& m : ms) {
        auto it = p.find(m);
        r.push_back(it == p.end() ? mpq_class(0) : it->second);
      }
      rows.push_back(r);
    }
    return oracle::rank(rows);
  }

  // dim of (R_+^j)_d inside R_d: monomials with at least j factors.
  static std::size_t power_dim(int j, int d) {
    auto rows = ideal(d);
    const auto base = rank_of(d, rows);
    for (auto [a, b] : monos(d))
      if (a + b >= j) rows.push_back({{{a, b}, 1}});
    return rank_of(d, rows) - base;
  }

  static std::size_t dim(int d) { return power_dim(d == 0 ? 0 : 1, d); }
};

PresentedGradedAlgebra example() {
  return PresentedGradedAlgebra::parse("a:1,b:3", "b^3-a^9, a*b^2-a^7", 30);
}

}  // namespace

TEST_SUITE("graded_ring") {

TEST_CASE("parsing generators and relations") {
  auto g = parse_generators("a:1,b:3");
  REQUIRE(g.size() == 2);
  CHECK(g[1].name == "b");
  CHECK(g[1].degree == 3);
  CHECK(split_relations("b^3-a^9, a*b^2-a^7").size() == 2);
  std::vector<std::string> names{"a", "b"};
  auto f = parse_polynomial("(a+b)^2 - 2*a*b", names);
  CHECK(f.to_string(names) == "a^2 + b^2");
  CHECK_THROWS_AS(parse_polynomial("a+", names), ParseError);
  CHECK_THROWS_AS(parse_polynomial("c", names), ParseError);
  CHECK_THROWS_AS(parse_generators("a:0"), ParseError);
  CHECK_THROWS(PresentedGradedAlgebra::parse("a:1,b:3", "b-a^2", 30));  // not homogeneous
}

TEST_CASE("dimensions against rational oracle") {
  auto ring = example();
  for (int d = 0; d <= 30; ++d) {
    CAPTURE(d);
    CHECK(ring.dimension(d) == ExampleOracle::dim(d));
  }
  CHECK(ring.dimension(3) == 2);
  CHECK(ring.dimension(9) == 2);
}

TEST_CASE("power filtration against rational oracle") {
  auto ring = example();
  for (int d = 1; d <= 20; ++d)
    for (int j = 1; j <= 7; ++j) {
      CAPTURE(d);
      CAPTURE(j);
      const auto want = ExampleOracle::power_dim(j, d) - ExampleOracle::power_dim(j + 1, d);
      CHECK(ring.layer_dimension(j, j + 1, d) == want);
    }
}

TEST_CASE("example ring beta values and witnesses") {
  auto ring = example();
  CHECK(beta_k_presented(ring, 1, 30).value == 3);
  for (int k = 2; k <= 4; ++k) {
    auto r = beta_k_presented(ring, k, 30);
    CHECK(r.value == 6);
    CHECK(r.status == "verified-up-to-cutoff");
  }
  auto b2 = ring.element("b^2");
  CHECK(ring.in_power(b2, 2));
  CHECK_FALSE(ring.in_power(b2, 3));
  for (int l = 7; l <= 30; ++l) {
    CAPTURE(l);
    CHECK(ExampleOracle::power_dim(5, l) == ExampleOracle::dim(l));
    CHECK_FALSE(ring.outside_power(5, l).has_value());
  }
}

TEST_CASE("normal forms") {
  auto ring = example();
  CHECK(ring.format(ring.normal_form(ring.element("b^3"))) == "a^9");
  CHECK(ring.normal_form(ring.element("a*b^2 - a^7")).is_zero());
  auto basis = ring.degree_basis(9);
  CHECK(basis.size() == 2);
}

TEST_CASE("cutoff is enforced") {
  auto ring = example();
  CHECK_THROWS_AS(ring.dimension(31), CapacityError);
}

}
