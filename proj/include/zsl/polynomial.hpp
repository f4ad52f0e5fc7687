#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zsl/cyclotomic.hpp"

namespace zsl {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
int weighted_degree(const Exponents& e, std::span<const int> weights);

/// Within one degree the monomial with the larger exponent in the last
/// variable is larger (ties broken by the previous variable, and so on).
bool reverse_lex_greater(const Exponents& a, const Exponents& b);

/// Global term order: total degree first, then reverse_lex_greater. Sorting
/// with this comparator puts the leading term first.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial with coefficients in Q(zeta_m). Zero coefficients
/// are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, CyclotomicNumber, TermOrder>;

  MultiPoly(std::size_t nvars = 0, int conductor = 1);

  static MultiPoly constant(std::size_t nvars, int conductor, const CyclotomicNumber& c);
  static MultiPoly monomial(std::size_t nvars, int conductor, Exponents exponents);
  static MultiPoly monomial(Exponents exponents, const CyclotomicNumber& coeff);
  static MultiPoly variable(std::size_t nvars, int conductor, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  int conductor() const { return conductor_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Max total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(std::span<const int> weights = {}) const;
  CyclotomicNumber coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const CyclotomicNumber& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const CyclotomicNumber& c) const;
  MultiPoly pow(int k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }

  // Higher degree first, then earlier variables first: "x1^3 + x2^3",
  // "2*x1*x2", "(1 + z3)*x1".
  // Default variable names are x1..xn.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void require_compatible(const MultiPoly& o) const;

  std::size_t nvars_;
  int conductor_;
  Terms terms_;
};

/// Sets every variable outside `vars` to zero.
MultiPoly restrict_to_support(const MultiPoly& f, std::span<const std::size_t> vars);

CyclotomicNumber evaluate(const MultiPoly& f, std::span<const CyclotomicNumber> point);

}  // namespace zsl
