#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "zsl/limits.hpp"
#include "zsl/polynomial.hpp"

namespace zsl {

/// All monomials of one (weighted) degree, sorted so that the largest
/// monomial under reverse_lex_greater comes first.
class DegreeSlice {
 public:
  DegreeSlice(std::size_t nvars, int degree, std::vector<int> weights = {},
              std::size_t max_monomials = SearchLimits{}.max_slice_monomials);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  const Exponents& monomial(std::size_t i) const { return monomials_[i]; }
  // Throws StructuralError when e is not in the slice.
  std::size_t index_of(const Exponents& e) const;

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
};

/// Row-reduced subspace of K^n with K = Q(zeta_m). Rows are kept fully
/// reduced with pivot entries equal to one.
class RowSpace {
 public:
  using Vector = std::vector<CyclotomicNumber>;

  RowSpace(std::size_t dimension, int conductor);

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  int conductor() const { return conductor_; }

  // Reduces v against the rows in place; returns true if v became zero.
  bool reduce(Vector& v) const;
  bool contains(Vector v) const { return reduce(v); }
  // Returns true if the rank grew.
  bool insert(Vector v);

  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t n_;
  int conductor_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // column -> row index or -1
};

/// Span of homogeneous polynomials living in one DegreeSlice.
class GradedSpan {
 public:
  GradedSpan(std::shared_ptr<const DegreeSlice> slice, int conductor);

  int degree() const { return slice_->degree(); }
  std::size_t dimension() const { return space_.rank(); }
  const DegreeSlice& slice() const { return *slice_; }

  RowSpace::Vector to_vector(const MultiPoly& f) const;
  MultiPoly to_poly(const RowSpace::Vector& v) const;

  bool insert(const MultiPoly& f);
  bool contains(const MultiPoly& f) const;
  // Normal form of f modulo the span.
  MultiPoly reduce(const MultiPoly& f) const;
  // Reduced basis, one polynomial per pivot, in pivot order.
  std::vector<MultiPoly> basis() const;
  // Monomials that are not pivots: they map to a basis of the quotient
  // slice / span.
  std::vector<Exponents> standard_monomials() const;

 private:
  std::shared_ptr<const DegreeSlice> slice_;
  std::size_t nvars_;
  int conductor_;
  RowSpace space_;
};

/// Filtration of a graded algebra R = K[x_1..x_n]^(something) / I by powers
/// of the augmentation ideal. `component(d)` spans R_d (as polynomials) and
/// `ideal(d)` spans the degree-d part of I. The power spans are
///   P(1, d) = R_d + I_d,
///   P(j + 1, d) = I_d + sum_{e} R_e * P(j, d - e).
class PowerFiltration {
 public:
  using Generator = std::function<std::vector<MultiPoly>(int degree)>;

  PowerFiltration(std::size_t nvars, int conductor, std::vector<int> weights, Generator component,
                  Generator ideal, SearchLimits limits = {});

  std::shared_ptr<const DegreeSlice> slice(int d);
  // I_d.
  const GradedSpan& ideal(int d);
  // R_d + I_d.
  const GradedSpan& component(int d);
  // (R_+^j)_d + I_d for j >= 1.
  const GradedSpan& power(int j, int d);

  // dim R_d modulo I_d.
  std::size_t component_dimension(int d);
  // dim of (R_+^j)_d / (R_+^{j+1})_d.
  std::size_t layer_dimension(int j, int d);
  // Spanning element of R_d not in P(j, d), if any.
  std::optional<MultiPoly> outside_power(int j, int d);

  int min_weight() const { return min_weight_; }
  const std::vector<int>& weights() const { return weights_; }
  const SearchLimits& limits() const { return limits_; }

 private:
  std::size_t nvars_;
  int conductor_;
  std::vector<int> weights_;
  int min_weight_;
  Generator component_gen_;
  Generator ideal_gen_;
  SearchLimits limits_;
  std::unordered_map<int, std::shared_ptr<const DegreeSlice>> slices_;
  std::unordered_map<int, GradedSpan> ideals_;
  std::unordered_map<int, GradedSpan> components_;
  std::unordered_map<int, std::vector<MultiPoly>> component_spanners_;
  std::map<std::pair<int, int>, GradedSpan> powers_;
};

}  // namespace zsl
