#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsl/graded_span.hpp"
#include "zsl/group.hpp"
#include "zsl/limits.hpp"
#include "zsl/polynomial.hpp"

namespace zsl {

/// x_i -> zeta_m^{scalars[i]} x_{perm[i]}.
struct MonomialAction {
  std::vector<std::size_t> perm;
  std::vector<std::int64_t> scalars;

  auto operator<=>(const MonomialAction&) const = default;
};

/// Acting by g and then by h.
MonomialAction compose(const MonomialAction& g, const MonomialAction& h, int conductor);

/// A finite group acting on K[x_1..x_n] by monomial substitutions with
/// scalars in the m-th roots of unity. The element list is the closure of the
/// generators; construction fails unless it has exactly `group_order`
/// elements.
class MonomialRep {
 public:
  MonomialRep(std::size_t nvars, int conductor, std::vector<MonomialAction> generators,
              std::int64_t group_order, std::vector<std::string> names = {},
              std::string label = "");

  std::size_t nvars() const { return nvars_; }
  int conductor() const { return conductor_; }
  std::int64_t group_order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<MonomialAction>& generators() const { return generators_; }
  const std::vector<MonomialAction>& elements() const { return elements_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& label() const { return label_; }

  MultiPoly act(const MonomialAction& g, const MultiPoly& f) const;
  bool is_invariant(const MultiPoly& f) const;
  std::string format(const MultiPoly& f) const { return f.to_string(names_); }

 private:
  std::size_t nvars_;
  int conductor_;
  std::vector<MonomialAction> generators_;
  std::vector<MonomialAction> elements_;
  std::vector<std::string> names_;
  std::string label_;
};

/// One variable x_j per character j of A (A identified with its dual), the
/// canonical generators acting diagonally. Variables are named x0, x1, ...
/// in element-index order, so x0 carries the trivial character.
MonomialRep regular_representation(const AbelianGroup& group, const SearchLimits& limits = {});

/// Z_p x| Z_d acting on x_1..x_d: the normal generator scales x_i by
/// zeta_p^{e^{i-1}}, the other generator maps x_i to x_{i+1} cyclically.
MonomialRep induced_module(const SemidirectGroup& group);

MultiPoly transfer(const MonomialRep& rep, const MultiPoly& f);

/// Basis of the degree-d invariants, from transfers of one monomial per
/// orbit.
GradedSpan invariant_basis(const MonomialRep& rep, int d, const SearchLimits& limits = {});
std::vector<MultiPoly> invariant_spanning_set(const MonomialRep& rep, int d,
                                              const SearchLimits& limits = {});

struct BetaRow {
  int degree = 0;
  std::size_t dim_component = 0;
  // dim R_d / (R_+^{k+1})_d.
  std::size_t dim_quotient = 0;
};

struct BetaReport {
  std::string rep;
  int k = 1;
  int beta1 = 0;
  int cutoff = 0;
  int value = 0;
  std::optional<MultiPoly> witness;
  std::string witness_text;
  std::vector<BetaRow> table;
};

/// beta_k of the invariant ring: the largest d with R_d not inside
/// (R_+^{k+1})_d. beta_1 is scanned up to |G|, then beta_k up to k beta_1.
BetaReport beta_k(const MonomialRep& rep, int k, const SearchLimits& limits = {});

struct CrossCheckReport {
  AbelianGroup group;
  int k = 1;
  std::int64_t beta = 0;
  std::int64_t davenport = 0;
  bool passed = false;
};

CrossCheckReport verify_beta_equals_davenport(const AbelianGroup& group, int k,
                                              const SearchLimits& limits = {});

struct FkTerm {
  std::vector<std::size_t> subset;  // orbit representative, 0-based variables
  MultiPoly monomial;               // m_S
};

struct FkFamily {
  SemidirectGroup group;
  MonomialRep rep;
  // f[k-1] is f_k, built from the k-subsets.
  std::vector<MultiPoly> f;
  std::vector<std::vector<FkTerm>> terms;
};

FkFamily construct_fk(const SemidirectGroup& group);

struct SupportRestriction {
  std::vector<std::size_t> support;  // 0-based
  std::vector<std::size_t> representative;
  std::int64_t c = 0;
  bool c_divides_d = false;
  bool nonvanishing = false;
};

struct SigmaZpZdReport {
  SemidirectGroup group;
  std::vector<std::string> f_text;
  std::vector<int> f_degrees;
  bool all_invariant = false;
  bool degrees_within_p = false;
  std::vector<SupportRestriction> restrictions;
  std::int64_t upper_bound = 0;  // max deg f_k
  std::int64_t lower_bound = 0;  // sigma(Z_p) = p
  std::int64_t sigma = 0;
  std::int64_t smallest_prime = 0;
  bool order_bound_holds = false;  // sigma <= |G| / q
  bool passed = false;
};

/// Throws VerificationFailure naming the support when some restriction
/// vanishes.
SigmaZpZdReport verify_sigma_zpzd(const SemidirectGroup& group);

struct SigmaAz2Report {
  std::int64_t n = 0;
  std::int64_t e = 0;
  std::string rep;
  std::vector<std::string> invariants;
  bool invariant = false;
  bool zero_locus_trivial = false;
  std::int64_t bound = 0;
  bool passed = false;
};

SigmaAz2Report verify_sigma_az2(std::int64_t n, std::int64_t e);

}  // namespace zsl
