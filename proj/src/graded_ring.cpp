#include "zsl/graded_ring.hpp"

#include <cctype>
#include <set>

#include "zsl/errors.hpp"

namespace zsl {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  MultiPoly parse() {
    MultiPoly f = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in \"" + std::string(text_) + "\"", pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly constant(long v) const {
    return MultiPoly::constant(names_.size(), 1, CyclotomicNumber(1, v));
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 100000000) fail("integer literal too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  MultiPoly expr() {
    MultiPoly f = term();
    while (true) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  MultiPoly term() {
    MultiPoly f = unary();
    while (accept('*')) f = f * unary();
    return f;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    MultiPoly base = primary();
    if (accept('^')) {
      const long k = integer();
      if (k > 1000) fail("exponent too large");
      return base.pow(static_cast<int>(k));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return MultiPoly::variable(names_.size(), 1, i);
      }
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Generator> parse_generators(std::string_view text) {
  std::vector<Generator> out;
  std::set<std::string> seen;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " in \"" + std::string(text) + "\"", pos);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start || std::isdigit(static_cast<unsigned char>(text[start]))) {
      pos = start;
      fail("expected generator name");
    }
    std::string name(text.substr(start, pos - start));
    skip();
    if (pos >= text.size() || text[pos] != ':') fail("expected ':'");
    ++pos;
    skip();
    const std::size_t dstart = pos;
    int degree = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (degree > 100000) fail("degree too large");
      degree = degree * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == dstart) fail("expected degree");
    if (degree < 1) {
      pos = dstart;
      fail("generator degree must be positive");
    }
    if (!seen.insert(name).second) {
      pos = start;
      fail("duplicate generator '" + name + "'");
    }
    out.push_back({std::move(name), degree});
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return out;
}

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return ExprParser(text, names).parse();
}

std::vector<std::string> split_relations(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

PresentedGradedAlgebra::PresentedGradedAlgebra(std::vector<Generator> generators,
                                               std::vector<MultiPoly> relations, int cutoff,
                                               SearchLimits limits)
    : gens_(std::move(generators)), relations_(std::move(relations)), cutoff_(cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  for (const auto& g : gens_) {
    if (g.degree < 1) throw DomainError("generator degree must be positive");
    names_.push_back(g.name);
    weights_.push_back(g.degree);
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& r = relations_[i];
    if (r.nvars() != gens_.size() || r.conductor() != 1) {
      throw StructuralError("relation does not live in the generator polynomial ring");
    }
    if (!r.is_homogeneous(weights_)) {
      throw ValidationError("relation " + format(r) + " is not homogeneous");
    }
    relation_degrees_.push_back(r.is_zero() ? -1 : weighted_degree(r.terms().begin()->first,
                                                                   weights_));
  }

  // The lambdas capture by value so the algebra stays movable.
  const std::size_t n = names_.size();
  auto component = [n, w = weights_](int d) {
    std::vector<MultiPoly> out;
    const DegreeSlice slice(n, d, w);
    for (const auto& e : slice.monomials()) out.push_back(MultiPoly::monomial(n, 1, e));
    return out;
  };
  auto ideal = [n, w = weights_, rels = relations_, degs = relation_degrees_](int d) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (degs[i] < 0 || degs[i] > d) continue;
      const DegreeSlice slice(n, d - degs[i], w);
      for (const auto& e : slice.monomials()) out.push_back(MultiPoly::monomial(n, 1, e) * rels[i]);
    }
    return out;
  };
  filt_ = std::make_unique<PowerFiltration>(names_.size(), 1, weights_, component, ideal, limits);
}

PresentedGradedAlgebra PresentedGradedAlgebra::parse(std::string_view gens, std::string_view rels,
                                                     int cutoff, SearchLimits limits) {
  auto generators = parse_generators(gens);
  std::vector<std::string> names;
  for (const auto& g : generators) names.push_back(g.name);
  std::vector<MultiPoly> relations;
  for (const auto& r : split_relations(rels)) relations.push_back(parse_polynomial(r, names));
  return PresentedGradedAlgebra(std::move(generators), std::move(relations), cutoff, limits);
}

MultiPoly PresentedGradedAlgebra::monomial(const Exponents& e) const {
  return MultiPoly::monomial(names_.size(), 1, e);
}

MultiPoly PresentedGradedAlgebra::element(std::string_view text) const {
  return parse_polynomial(text, names_);
}

void PresentedGradedAlgebra::require_degree(int d) const {
  if (d < 0) throw DomainError("degree must be non-negative");
  if (d > cutoff_) {
    throw CapacityError("degree " + std::to_string(d) + " exceeds the cutoff " +
                        std::to_string(cutoff_));
  }
}

std::size_t PresentedGradedAlgebra::dimension(int d) {
  require_degree(d);
  return filt_->component_dimension(d);
}

std::vector<Exponents> PresentedGradedAlgebra::degree_basis(int d) {
  require_degree(d);
  return filt_->ideal(d).standard_monomials();
}

namespace {

int homogeneous_degree(const MultiPoly& f, const std::vector<int>& weights) {
  if (!f.is_homogeneous(weights)) throw DomainError("element is not homogeneous");
  return f.is_zero() ? 0 : weighted_degree(f.terms().begin()->first, weights);
}

}  // namespace

MultiPoly PresentedGradedAlgebra::normal_form(const MultiPoly& f) {
  const int d = homogeneous_degree(f, weights_);
  require_degree(d);
  return filt_->ideal(d).reduce(f);
}

bool PresentedGradedAlgebra::in_power(const MultiPoly& f, int j) {
  const int d = homogeneous_degree(f, weights_);
  require_degree(d);
  if (f.is_zero()) return true;
  if (d == 0) return filt_->ideal(0).contains(f);
  return filt_->power(j, d).contains(f);
}

std::size_t PresentedGradedAlgebra::layer_dimension(int j, int j2, int d) {
  require_degree(d);
  if (j >= j2) throw DomainError("layer needs j < j'");
  return filt_->power(j, d).dimension() - filt_->power(j2, d).dimension();
}

std::optional<MultiPoly> PresentedGradedAlgebra::outside_power(int j, int d) {
  require_degree(d);
  return filt_->outside_power(j, d);
}

PresentedBetaReport beta_k_presented(PresentedGradedAlgebra& ring, int k, int cutoff) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (cutoff < 1) throw DomainError("cutoff must be positive");
  if (cutoff > ring.cutoff()) {
    throw CapacityError("requested cutoff " + std::to_string(cutoff) +
                        " exceeds the algebra's materialization cutoff " +
                        std::to_string(ring.cutoff()));
  }
  PresentedBetaReport r;
  r.k = k;
  r.cutoff = cutoff;
  for (int d = 1; d <= cutoff; ++d) {
    const std::size_t q = ring.dimension(d) == 0 ? 0 : ring.layer_dimension(1, k + 1, d);
    r.table.emplace_back(d, q);
    if (q > 0) {
      r.value = d;
      r.witness = ring.format(ring.normal_form(*ring.outside_power(k + 1, d)));
    }
  }
  return r;
}

}  // namespace zsl
