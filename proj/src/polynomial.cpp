#include "zsl/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "zsl/errors.hpp"

namespace zsl {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int weighted_degree(const Exponents& e, std::span<const int> weights) {
  if (weights.empty()) return total_degree(e);
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
  return d;
}

bool reverse_lex_greater(const Exponents& a, const Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return reverse_lex_greater(a, b);
}

MultiPoly::MultiPoly(std::size_t nvars, int conductor) : nvars_(nvars), conductor_(conductor) {}

MultiPoly MultiPoly::constant(std::size_t nvars, int conductor, const CyclotomicNumber& c) {
  MultiPoly p(nvars, conductor);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(std::size_t nvars, int conductor, Exponents exponents) {
  if (exponents.size() != nvars) throw StructuralError("exponent vector has wrong arity");
  MultiPoly p(nvars, conductor);
  p.add_term(exponents, CyclotomicNumber(conductor, 1L));
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exponents, const CyclotomicNumber& coeff) {
  MultiPoly p(exponents.size(), coeff.conductor());
  p.add_term(exponents, coeff);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, int conductor, std::size_t index) {
  if (index >= nvars) throw StructuralError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, conductor, std::move(e));
}

int MultiPoly::degree() const {
  // Leading term has the largest total degree.
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous(std::span<const int> weights) const {
  if (terms_.empty()) return true;
  const int d = weighted_degree(terms_.begin()->first, weights);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return weighted_degree(t.first, weights) == d; });
}

CyclotomicNumber MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CyclotomicNumber(conductor_) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const CyclotomicNumber& c) {
  if (e.size() != nvars_) throw StructuralError("exponent vector has wrong arity");
  if (c.conductor() != conductor_) {
    throw StructuralError("coefficient conductor " + std::to_string(c.conductor()) +
                          " does not match polynomial conductor " + std::to_string(conductor_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) {
    throw StructuralError("polynomial arity mismatch: " + std::to_string(nvars_) + " vs " +
                          std::to_string(o.nvars_));
  }
  if (conductor_ != o.conductor_) throw StructuralError("polynomial conductor mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly out(a.nvars_, a.conductor_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const { return scaled(CyclotomicNumber(conductor_, -1L)); }

MultiPoly MultiPoly::scaled(const CyclotomicNumber& c) const {
  MultiPoly out(nvars_, conductor_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative polynomial power");
  MultiPoly out = constant(nvars_, conductor_, CyclotomicNumber(conductor_, 1L));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
  };
  // Higher degree first; inside one degree the earlier variables come first.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    const int da = total_degree(a->first);
    const int db = total_degree(b->first);
    if (da != db) return da > db;
    return reverse_lex_greater(b->first, a->first);
  });
  std::string out;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += name(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coef;
    if (c.is_rational()) {
      mpq_class v = c.rational_value();
      negative = v < 0;
      if (negative) v = -v;
      if (v != 1 || mono.empty()) coef = v.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    std::string term = coef;
    if (!coef.empty() && !mono.empty()) term += '*';
    term += mono;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

MultiPoly restrict_to_support(const MultiPoly& f, std::span<const std::size_t> vars) {
  std::vector<char> keep(f.nvars(), 0);
  for (auto v : vars) {
    if (v >= f.nvars()) throw StructuralError("variable index out of range");
    keep[v] = 1;
  }
  MultiPoly out(f.nvars(), f.conductor());
  for (const auto& [e, c] : f.terms()) {
    bool inside = true;
    for (std::size_t i = 0; i < e.size() && inside; ++i) inside = e[i] == 0 || keep[i];
    if (inside) out.add_term(e, c);
  }
  return out;
}

CyclotomicNumber evaluate(const MultiPoly& f, std::span<const CyclotomicNumber> point) {
  if (point.size() != f.nvars()) throw StructuralError("evaluation point has wrong arity");
  CyclotomicNumber total(f.conductor());
  for (const auto& [e, c] : f.terms()) {
    CyclotomicNumber term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

}  // namespace zsl
