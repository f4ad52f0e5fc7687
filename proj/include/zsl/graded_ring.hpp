#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsl/graded_span.hpp"
#include "zsl/limits.hpp"
#include "zsl/polynomial.hpp"

namespace zsl {

struct Generator {
  std::string name;
  int degree = 1;
};

/// Parses "a:1,b:3".
std::vector<Generator> parse_generators(std::string_view text);

/// Parses an integer-coefficient polynomial expression in the named
/// generators: + - * ^, parentheses, integer literals.
MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Splits "b^3-a^9, a*b^2-a^7" at top-level commas.
std::vector<std::string> split_relations(std::string_view text);

/// K[generators] / (relations) with K = Q, graded by the generator degrees.
/// Degree slices are materialized on demand up to `cutoff`.
class PresentedGradedAlgebra {
 public:
  PresentedGradedAlgebra(std::vector<Generator> generators, std::vector<MultiPoly> relations,
                         int cutoff = 64, SearchLimits limits = {});
  static PresentedGradedAlgebra parse(std::string_view gens, std::string_view rels,
                                      int cutoff = 64, SearchLimits limits = {});

  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<MultiPoly>& relations() const { return relations_; }
  int cutoff() const { return cutoff_; }

  std::string format(const MultiPoly& f) const { return f.to_string(names_); }
  MultiPoly monomial(const Exponents& e) const;
  // Parses an expression in the generators.
  MultiPoly element(std::string_view text) const;

  // dim R_d.
  std::size_t dimension(int d);
  // Monomials whose residues form a basis of R_d.
  std::vector<Exponents> degree_basis(int d);
  // Normal form of a homogeneous f modulo the relations.
  MultiPoly normal_form(const MultiPoly& f);

  // f (homogeneous of degree d) lies in (R_+^j)_d.
  bool in_power(const MultiPoly& f, int j);
  // dim (R_+^j)_d / (R_+^{j'})_d for j < j'.
  std::size_t layer_dimension(int j, int j2, int d);
  std::optional<MultiPoly> outside_power(int j, int d);

 private:
  void require_degree(int d) const;

  std::vector<Generator> gens_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<MultiPoly> relations_;
  std::vector<int> relation_degrees_;
  int cutoff_;
  std::unique_ptr<PowerFiltration> filt_;
};

struct PresentedBetaReport {
  int k = 1;
  int cutoff = 0;
  int value = 0;
  std::string status = "verified-up-to-cutoff";
  std::string witness;
  // (d, dim R_d / (R_+^{k+1})_d)
  std::vector<std::pair<int, std::size_t>> table;
};

/// Largest d <= cutoff with R_d not inside (R_+^{k+1})_d. The answer is only
/// claimed within the window.
PresentedBetaReport beta_k_presented(PresentedGradedAlgebra& ring, int k, int cutoff);

}  // namespace zsl
