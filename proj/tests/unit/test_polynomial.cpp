#include "doctest.h"
#include "oracles.hpp"
#include "zsl/errors.hpp"
#include "zsl/graded_span.hpp"
#include "zsl/polynomial.hpp"

#include <random>

using namespace zsl;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, std::size_t n, int m, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-3, 3), pw(0, m - 1), terms(0, 4);
  MultiPoly f(n, m);
  for (int t = terms(rng); t > 0; --t) {
    Exponents ex(n);
    for (auto& x : ex) x = e(rng);
    f.add_term(ex, CyclotomicNumber(m, static_cast<long>(c(rng))) * CyclotomicNumber::zeta(m, pw(rng)));
  }
  return f;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("term order") {
  TermOrder lt;
  CHECK(lt(Exponents{0, 3}, Exponents{2, 0}));  // higher degree sorts first
  CHECK_FALSE(lt(Exponents{2, 0}, Exponents{0, 3}));
  CHECK(reverse_lex_greater(Exponents{0, 3}, Exponents{3, 0}));
  CHECK(reverse_lex_greater(Exponents{1, 1, 1}, Exponents{2, 1, 0}));
  CHECK(total_degree(Exponents{1, 2, 3}) == 6);
  std::vector<int> w{1, 3};
  CHECK(weighted_degree(Exponents{2, 1}, w) == 5);
}

TEST_CASE("printing") {
  auto x1 = MultiPoly::variable(2, 1, 0), x2 = MultiPoly::variable(2, 1, 1);
  CHECK((x1.pow(3) + x2.pow(3)).to_string() == "x1^3 + x2^3");
  CHECK((x1 * x2 + x1 * x2).to_string() == "2*x1*x2");
  CHECK(MultiPoly(2, 1).to_string() == "0");
  std::vector<std::string> names{"a", "b"};
  CHECK((x2 - x1.pow(2)).to_string(names) == "-a^2 + b");
}

TEST_CASE("property: commutative ring axioms") {
  std::mt19937_64 rng(23);
  for (int m : {1, 3, 4}) {
    for (int t = 0; t < 30; ++t) {
      auto f = random_poly(rng, 3, m, 2), g = random_poly(rng, 3, m, 2), h = random_poly(rng, 3, m, 2);
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK(f.pow(2) == f * f);
      if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() == f.degree() + g.degree());
    }
  }
}

TEST_CASE("property: restriction and evaluation are ring maps") {
  std::mt19937_64 rng(29);
  std::vector<std::size_t> keep{0, 2};
  for (int t = 0; t < 30; ++t) {
    auto f = random_poly(rng, 3, 3, 2), g = random_poly(rng, 3, 3, 2);
    CHECK(restrict_to_support(f * g, keep) == restrict_to_support(f, keep) * restrict_to_support(g, keep));
    CHECK(restrict_to_support(f + g, keep) == restrict_to_support(f, keep) + restrict_to_support(g, keep));
    std::vector<CyclotomicNumber> pt{CyclotomicNumber::zeta(3), CyclotomicNumber(3, 2L),
                                     CyclotomicNumber(3, -1L)};
    CHECK(evaluate(f * g, pt) == evaluate(f, pt) * evaluate(g, pt));
  }
}

TEST_CASE("mismatched operands") {
  CHECK_THROWS(MultiPoly(2, 1) + MultiPoly(3, 1));
  CHECK_THROWS(MultiPoly(2, 3) + MultiPoly(2, 4));
}

TEST_CASE("degree slices") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) CHECK(DegreeSlice(n, d).size() == binom(n + d - 1, d));
  DegreeSlice w(2, 9, {1, 3});
  CHECK(w.size() == 4);  // a^9, a^6 b, a^3 b^2, b^3
  CHECK(w.monomial(0) == Exponents{0, 3});
  CHECK_THROWS_AS(DegreeSlice(6, 12, {}, 100), CapacityError);
}

TEST_CASE("row space rank matches rational elimination") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int t = 0; t < 40; ++t) {
    RowSpace rs(5, 1);
    std::vector<std::vector<mpq_class>> rows;
    for (int r = 0; r < 4; ++r) {
      RowSpace::Vector row;
      std::vector<mpq_class> q;
      for (int c = 0; c < 5; ++c) {
        int x = v(rng) * (c % 2 == 0 ? 1 : (r % 2));
        row.push_back(CyclotomicNumber(1, static_cast<long>(x)));
        q.push_back(x);
      }
      rs.insert(row);
      rows.push_back(q);
    }
    CHECK(rs.rank() == oracle::rank(rows));
    for (std::size_t i = 0; i < rs.rank(); ++i)
      CHECK(rs.rows()[i][rs.pivots()[i]] == CyclotomicNumber(1, 1L));
  }
}

TEST_CASE("graded span round trip") {
  auto slice = std::make_shared<const DegreeSlice>(2, 2);
  GradedSpan sp(slice, 1);
  auto x = MultiPoly::variable(2, 1, 0), y = MultiPoly::variable(2, 1, 1);
  CHECK(sp.insert(x * y));
  CHECK(sp.insert(x * x + y * y));
  CHECK_FALSE(sp.insert(x * y + y * y + x * x));
  CHECK(sp.dimension() == 2);
  CHECK(sp.standard_monomials().size() == 1);
  CHECK(sp.to_poly(sp.to_vector(x * x)) == x * x);
  CHECK(sp.reduce(x * x + y * y).is_zero());
}

}
