#include "zsl/graded_span.hpp"

#include <algorithm>

#include "zsl/errors.hpp"

namespace zsl {

namespace {

void enumerate(std::size_t var, int remaining, const std::vector<int>& w, Exponents& cur,
               std::vector<Exponents>& out, std::size_t cap) {
  if (var + 1 == cur.size()) {
    if (remaining % w[var] != 0) return;
    cur[var] = remaining / w[var];
    if (out.size() >= cap) {
      throw CapacityError("degree slice exceeds " + std::to_string(cap) + " monomials");
    }
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int a = 0; a * w[var] <= remaining; ++a) {
    cur[var] = a;
    enumerate(var + 1, remaining - a * w[var], w, cur, out, cap);
  }
  cur[var] = 0;
}

}  // namespace

DegreeSlice::DegreeSlice(std::size_t nvars, int degree, std::vector<int> weights,
                         std::size_t max_monomials)
    : nvars_(nvars), degree_(degree) {
  if (weights.empty()) weights.assign(nvars, 1);
  if (weights.size() != nvars) throw StructuralError("weight vector has wrong arity");
  for (int w : weights) {
    if (w < 1) throw DomainError("variable weights must be positive");
  }
  if (degree < 0) return;
  if (nvars == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    Exponents cur(nvars, 0);
    enumerate(0, degree, weights, cur, monomials_, max_monomials);
  }
  std::sort(monomials_.begin(), monomials_.end(), reverse_lex_greater);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t DegreeSlice::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) {
    throw StructuralError("monomial does not have degree " + std::to_string(degree_));
  }
  return it->second;
}

RowSpace::RowSpace(std::size_t dimension, int conductor)
    : n_(dimension), conductor_(conductor), pivot_row_(dimension, -1) {}

bool RowSpace::reduce(Vector& v) const {
  if (v.size() != n_) throw StructuralError("vector length does not match row space");
  bool zero = true;
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c].is_zero()) continue;
    const long r = pivot_row_[c];
    if (r < 0) {
      zero = false;
      continue;
    }
    const CyclotomicNumber f = v[c];
    const Vector& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = c; k < n_; ++k) {
      if (!row[k].is_zero()) v[k] -= f * row[k];
    }
  }
  return zero;
}

bool RowSpace::insert(Vector v) {
  if (reduce(v)) return false;
  std::size_t p = 0;
  while (v[p].is_zero()) ++p;
  const CyclotomicNumber inv = v[p].inverse();
  for (std::size_t k = p; k < n_; ++k) {
    if (!v[k].is_zero()) v[k] *= inv;
  }
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const CyclotomicNumber f = row[p];
    for (std::size_t k = p; k < n_; ++k) {
      if (!v[k].is_zero()) row[k] -= f * v[k];
    }
  }
  pivot_row_[p] = static_cast<long>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(v));
  return true;
}

GradedSpan::GradedSpan(std::shared_ptr<const DegreeSlice> slice, int conductor)
    : slice_(std::move(slice)),
      nvars_(slice_->nvars()),
      conductor_(conductor),
      space_(slice_->size(), conductor) {}

RowSpace::Vector GradedSpan::to_vector(const MultiPoly& f) const {
  if (f.nvars() != nvars_ || f.conductor() != conductor_) {
    throw StructuralError("polynomial does not live in this graded span");
  }
  RowSpace::Vector v(slice_->size(), CyclotomicNumber(conductor_));
  for (const auto& [e, c] : f.terms()) v[slice_->index_of(e)] = c;
  return v;
}

MultiPoly GradedSpan::to_poly(const RowSpace::Vector& v) const {
  MultiPoly f(nvars_, conductor_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) f.add_term(slice_->monomial(i), v[i]);
  }
  return f;
}

bool GradedSpan::insert(const MultiPoly& f) {
  if (f.is_zero()) return false;
  return space_.insert(to_vector(f));
}

bool GradedSpan::contains(const MultiPoly& f) const {
  if (f.is_zero()) return true;
  return space_.contains(to_vector(f));
}

MultiPoly GradedSpan::reduce(const MultiPoly& f) const {
  auto v = to_vector(f);
  space_.reduce(v);
  return to_poly(v);
}

std::vector<MultiPoly> GradedSpan::basis() const {
  std::vector<std::size_t> order(space_.rank());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return space_.pivots()[a] < space_.pivots()[b]; });
  std::vector<MultiPoly> out;
  for (auto i : order) out.push_back(to_poly(space_.rows()[i]));
  return out;
}

std::vector<Exponents> GradedSpan::standard_monomials() const {
  std::vector<char> pivot(slice_->size(), 0);
  for (auto p : space_.pivots()) pivot[p] = 1;
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < slice_->size(); ++i) {
    if (!pivot[i]) out.push_back(slice_->monomial(i));
  }
  return out;
}

PowerFiltration::PowerFiltration(std::size_t nvars, int conductor, std::vector<int> weights,
                                 Generator component, Generator ideal, SearchLimits limits)
    : nvars_(nvars),
      conductor_(conductor),
      weights_(std::move(weights)),
      component_gen_(std::move(component)),
      ideal_gen_(std::move(ideal)),
      limits_(limits) {
  if (weights_.empty()) weights_.assign(nvars, 1);
  if (weights_.size() != nvars) throw StructuralError("weight vector has wrong arity");
  min_weight_ = weights_.empty() ? 1 : *std::min_element(weights_.begin(), weights_.end());
  if (min_weight_ < 1) throw DomainError("variable weights must be positive");
}

std::shared_ptr<const DegreeSlice> PowerFiltration::slice(int d) {
  auto it = slices_.find(d);
  if (it != slices_.end()) return it->second;
  auto s = std::make_shared<const DegreeSlice>(nvars_, d, weights_, limits_.max_slice_monomials);
  slices_.emplace(d, s);
  return s;
}

const GradedSpan& PowerFiltration::ideal(int d) {
  if (auto it = ideals_.find(d); it != ideals_.end()) return it->second;
  GradedSpan span(slice(d), conductor_);
  if (ideal_gen_) {
    for (const auto& f : ideal_gen_(d)) span.insert(f);
  }
  return ideals_.emplace(d, std::move(span)).first->second;
}

const GradedSpan& PowerFiltration::component(int d) {
  if (auto it = components_.find(d); it != components_.end()) return it->second;
  GradedSpan span = ideal(d);
  auto gens = component_gen_(d);
  for (const auto& f : gens) span.insert(f);
  component_spanners_[d] = std::move(gens);
  return components_.emplace(d, std::move(span)).first->second;
}

const GradedSpan& PowerFiltration::power(int j, int d) {
  if (j < 1) throw DomainError("power index must be at least 1");
  if (j == 1) return component(d);
  const auto key = std::make_pair(j, d);
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  limits_.check_deadline("power filtration");

  GradedSpan span = ideal(d);
  const std::size_t full = component(d).dimension();
  if (d >= j * min_weight_ && span.dimension() < full) {
    // Multiply reduced bases; both factors are taken modulo the ideal, which
    // is harmless since I is closed under multiplication by anything.
    for (int e = min_weight_; e <= d - (j - 1) * min_weight_ && span.dimension() < full; ++e) {
      const auto left = component(e).basis();
      if (left.empty()) continue;
      const auto right = power(j - 1, d - e).basis();
      for (const auto& a : left) {
        for (const auto& b : right) {
          span.insert(a * b);
          if (span.dimension() == full) break;
        }
        if (span.dimension() == full) break;
      }
      limits_.check_deadline("power filtration");
    }
  }
  return powers_.emplace(key, std::move(span)).first->second;
}

std::size_t PowerFiltration::component_dimension(int d) {
  return component(d).dimension() - ideal(d).dimension();
}

std::size_t PowerFiltration::layer_dimension(int j, int d) {
  return power(j, d).dimension() - power(j + 1, d).dimension();
}

std::optional<MultiPoly> PowerFiltration::outside_power(int j, int d) {
  const GradedSpan& p = power(j, d);
  component(d);
  for (const auto& f : component_spanners_[d]) {
    if (!p.contains(f)) return f;
  }
  return std::nullopt;
}

}  // namespace zsl
