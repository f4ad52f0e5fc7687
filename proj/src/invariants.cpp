#include "zsl/invariants.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "zsl/constructive.hpp"
#include "zsl/davenport.hpp"
#include "zsl/errors.hpp"

namespace zsl {

namespace {

constexpr std::size_t kMaxClosure = 100000;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

MonomialAction identity_action(std::size_t nvars) {
  MonomialAction id;
  id.perm.resize(nvars);
  for (std::size_t i = 0; i < nvars; ++i) id.perm[i] = i;
  id.scalars.assign(nvars, 0);
  return id;
}

// Image of a monomial: new exponents and the power of zeta picked up.
std::pair<Exponents, std::int64_t> act_monomial(const MonomialAction& g, const Exponents& e,
                                                int conductor) {
  Exponents out(e.size(), 0);
  std::int64_t power = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out[g.perm[i]] += e[i];
    power += g.scalars[i] * e[i];
  }
  return {std::move(out), mod(power, conductor)};
}

Exponents shift_exponents(const Exponents& e, std::size_t t) {
  Exponents out(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) out[(i + t) % e.size()] = e[i];
  return out;
}

std::vector<std::size_t> shift_subset(const std::vector<std::size_t>& s, std::size_t t,
                                      std::size_t n) {
  std::vector<std::size_t> out;
  for (auto i : s) out.push_back((i + t) % n);
  std::sort(out.begin(), out.end());
  return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string format_subset(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

}  // namespace

MonomialAction compose(const MonomialAction& g, const MonomialAction& h, int conductor) {
  MonomialAction out;
  const std::size_t n = g.perm.size();
  out.perm.resize(n);
  out.scalars.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.perm[i] = h.perm[g.perm[i]];
    out.scalars[i] = mod(g.scalars[i] + h.scalars[g.perm[i]], conductor);
  }
  return out;
}

MonomialRep::MonomialRep(std::size_t nvars, int conductor, std::vector<MonomialAction> generators,
                         std::int64_t group_order, std::vector<std::string> names,
                         std::string label)
    : nvars_(nvars),
      conductor_(conductor),
      generators_(std::move(generators)),
      names_(std::move(names)),
      label_(std::move(label)) {
  if (conductor < 1) throw DomainError("conductor must be positive");
  if (group_order < 1) throw DomainError("group order must be positive");
  for (auto& g : generators_) {
    if (g.perm.size() != nvars || g.scalars.size() != nvars) {
      throw StructuralError("generator acts on the wrong number of variables");
    }
    std::vector<char> hit(nvars, 0);
    for (auto j : g.perm) {
      if (j >= nvars || hit[j]) throw ValidationError("generator permutation is not a bijection");
      hit[j] = 1;
    }
    for (auto& a : g.scalars) a = mod(a, conductor);
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  if (names_.size() != nvars) throw StructuralError("wrong number of variable names");

  std::set<MonomialAction> seen{identity_action(nvars)};
  std::deque<MonomialAction> queue{identity_action(nvars)};
  elements_.push_back(identity_action(nvars));
  while (!queue.empty()) {
    const MonomialAction x = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      MonomialAction y = compose(x, g, conductor);
      if (!seen.insert(y).second) continue;
      if (seen.size() > static_cast<std::size_t>(group_order) || seen.size() > kMaxClosure) {
        throw ValidationError("closure of " + (label_.empty() ? "the generators" : label_) +
                              " exceeds the declared order " + std::to_string(group_order));
      }
      elements_.push_back(y);
      queue.push_back(std::move(y));
    }
  }
  if (static_cast<std::int64_t>(elements_.size()) != group_order) {
    throw ValidationError("closure has " + std::to_string(elements_.size()) +
                          " elements, declared order " + std::to_string(group_order));
  }
}

MultiPoly MonomialRep::act(const MonomialAction& g, const MultiPoly& f) const {
  if (f.nvars() != nvars_) throw StructuralError("polynomial arity does not match representation");
  MultiPoly out(nvars_, conductor_);
  for (const auto& [e, c] : f.terms()) {
    auto [img, power] = act_monomial(g, e, conductor_);
    out.add_term(img, c * CyclotomicNumber::zeta(conductor_, power));
  }
  return out;
}

bool MonomialRep::is_invariant(const MultiPoly& f) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const MonomialAction& g) { return act(g, f) == f; });
}

MonomialRep regular_representation(const AbelianGroup& group, const SearchLimits& limits) {
  const std::int64_t order = group.order();
  if (order > limits.max_group_order) {
    throw CapacityError("regular representation of " + group.to_string() + " exceeds order limit " +
                        std::to_string(limits.max_group_order));
  }
  const auto n = static_cast<std::size_t>(order);
  const auto m = static_cast<int>(group.exponent());
  const auto& factors = group.invariant_factors();
  std::vector<MonomialAction> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    MonomialAction g = identity_action(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto chi = group.element_at(static_cast<std::int64_t>(j));
      g.scalars[j] = chi.coords[i] * (m / factors[i]);
    }
    gens.push_back(std::move(g));
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j));
  return MonomialRep(n, m, std::move(gens), order, std::move(names),
                     "reg(" + group.to_string() + ")");
}

MonomialRep induced_module(const SemidirectGroup& group) {
  const auto d = static_cast<std::size_t>(group.d());
  const auto p = static_cast<int>(group.p());
  MonomialAction a = identity_action(d);
  for (std::size_t i = 0; i < d; ++i) {
    a.scalars[i] = power_mod(group.e(), static_cast<std::int64_t>(i), group.p());
  }
  MonomialAction b = identity_action(d);
  for (std::size_t i = 0; i < d; ++i) b.perm[i] = (i + 1) % d;
  return MonomialRep(d, p, {a, b}, group.order(), {}, "ind(" + group.to_string() + ")");
}

MultiPoly transfer(const MonomialRep& rep, const MultiPoly& f) {
  MultiPoly out(rep.nvars(), rep.conductor());
  for (const auto& g : rep.elements()) out += rep.act(g, f);
  return out;
}

std::vector<MultiPoly> invariant_spanning_set(const MonomialRep& rep, int d,
                                              const SearchLimits& limits) {
  if (d < 0) throw DomainError("degree must be non-negative");
  const DegreeSlice slice(rep.nvars(), d, {}, limits.max_slice_monomials);
  const int m = rep.conductor();
  std::vector<CyclotomicNumber> zeta;
  for (int i = 0; i < m; ++i) zeta.push_back(CyclotomicNumber::zeta(m, i));

  std::set<Exponents> seen;
  std::vector<MultiPoly> out;
  for (const auto& mono : slice.monomials()) {
    if (seen.count(mono)) continue;
    MultiPoly t(rep.nvars(), m);
    for (const auto& g : rep.elements()) {
      auto [img, power] = act_monomial(g, mono, m);
      t.add_term(img, zeta[static_cast<std::size_t>(power)]);
      seen.insert(std::move(img));
    }
    if (!t.is_zero()) out.push_back(std::move(t));
  }
  return out;
}

GradedSpan invariant_basis(const MonomialRep& rep, int d, const SearchLimits& limits) {
  GradedSpan span(std::make_shared<const DegreeSlice>(rep.nvars(), d, std::vector<int>{},
                                                      limits.max_slice_monomials),
                  rep.conductor());
  for (const auto& f : invariant_spanning_set(rep, d, limits)) span.insert(f);
  return span;
}

BetaReport beta_k(const MonomialRep& rep, int k, const SearchLimits& limits) {
  if (k < 1) throw DomainError("k must be at least 1");
  PowerFiltration filt(
      rep.nvars(), rep.conductor(), {},
      [&](int d) { return invariant_spanning_set(rep, d, limits); }, nullptr, limits);

  BetaReport report;
  report.rep = rep.label();
  report.k = k;
  auto partial = [&](const CapacityError& err) {
    std::string msg = std::string(err.what()) + "; partial table (d:dim R_d:dim quotient)";
    for (const auto& row : report.table) {
      msg += " " + std::to_string(row.degree) + ":" + std::to_string(row.dim_component) + ":" +
             std::to_string(row.dim_quotient);
    }
    return CapacityError(msg);
  };

  try {
    const int noether = static_cast<int>(rep.group_order());
    for (int d = 1; d <= noether; ++d) {
      if (filt.outside_power(2, d)) report.beta1 = d;
    }
    report.cutoff = k * report.beta1;
    for (int d = 1; d <= report.cutoff; ++d) {
      BetaRow row;
      row.degree = d;
      row.dim_component = filt.component_dimension(d);
      row.dim_quotient = filt.component(d).dimension() - filt.power(k + 1, d).dimension();
      report.table.push_back(row);
      if (row.dim_quotient > 0) {
        report.value = d;
        report.witness = filt.outside_power(k + 1, d);
      }
    }
  } catch (const CapacityError& err) {
    throw partial(err);
  }
  if (report.witness) {
    report.witness = report.witness->scaled(report.witness->terms().begin()->second.inverse());
    report.witness_text = rep.format(*report.witness);
  }
  return report;
}

CrossCheckReport verify_beta_equals_davenport(const AbelianGroup& group, int k,
                                              const SearchLimits& limits) {
  CrossCheckReport r;
  r.group = group;
  r.k = k;
  r.beta = beta_k(regular_representation(group, limits), k, limits).value;
  r.davenport = davenport_k(group, k, limits).value_Dk;
  r.passed = r.beta == r.davenport;
  return r;
}

FkFamily construct_fk(const SemidirectGroup& group) {
  FkFamily fam{group, induced_module(group), {}, {}};
  const auto d = static_cast<std::size_t>(group.d());
  const int p = static_cast<int>(group.p());
  std::vector<std::int64_t> theta(d);
  for (std::size_t i = 0; i < d; ++i) {
    theta[i] = power_mod(group.e(), static_cast<std::int64_t>(i), group.p());
  }

  for (std::size_t k = 1; k <= d; ++k) {
    MultiPoly f(d, p);
    std::vector<FkTerm> terms;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& subset : combinations(d, k)) {
      if (seen.count(subset)) continue;
      for (std::size_t t = 0; t < d; ++t) seen.insert(shift_subset(subset, t, d));

      std::vector<std::int64_t> chars;
      for (auto i : subset) chars.push_back(theta[i]);
      const auto lemma = zero_sum_with_support(group.p(), chars);
      Exponents e(d, 0);
      for (auto i : subset) {
        e[i] = static_cast<int>(
            lemma.sequence.multiplicity(AbelianGroup::cyclic(group.p()).element({theta[i]})));
      }
      MultiPoly m = MultiPoly::monomial(d, p, e);
      for (std::size_t t = 0; t < d; ++t) f += MultiPoly::monomial(d, p, shift_exponents(e, t));
      terms.push_back({subset, std::move(m)});
    }
    if (!fam.rep.is_invariant(f)) {
      throw VerificationFailure("f_" + std::to_string(k) + " for " + group.to_string() +
                                " is not invariant");
    }
    fam.f.push_back(std::move(f));
    fam.terms.push_back(std::move(terms));
  }
  return fam;
}

SigmaZpZdReport verify_sigma_zpzd(const SemidirectGroup& group) {
  const auto d = static_cast<std::size_t>(group.d());
  if (d > 20) throw CapacityError("support enumeration limited to d <= 20");
  const FkFamily fam = construct_fk(group);

  SigmaZpZdReport r{group, {}, {}, false, false, {}, 0, 0, 0, 0, false, false};
  r.all_invariant = true;
  r.degrees_within_p = true;
  for (const auto& f : fam.f) {
    r.f_text.push_back(fam.rep.format(f));
    r.f_degrees.push_back(f.degree());
    r.all_invariant = r.all_invariant && fam.rep.is_invariant(f);
    r.degrees_within_p = r.degrees_within_p && f.degree() <= group.p();
    r.upper_bound = std::max<std::int64_t>(r.upper_bound, f.degree());
  }

  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (1u << i)) support.push_back(i);
    }
    const std::size_t k = support.size();
    const MultiPoly restricted = restrict_to_support(fam.f[k - 1], support);

    SupportRestriction sr;
    sr.support = support;
    for (const auto& term : fam.terms[k - 1]) {
      for (std::size_t t = 0; t < d && sr.representative.empty(); ++t) {
        if (shift_subset(term.subset, t, d) != support) continue;
        sr.representative = term.subset;
        const Exponents expected = shift_exponents(term.monomial.terms().begin()->first, t);
        if (restricted.size() == 1 && restricted.terms().begin()->first == expected) {
          const auto& c = restricted.terms().begin()->second;
          if (c.is_rational() && c.rational_value().get_den() == 1) {
            sr.c = c.rational_value().get_num().get_si();
            sr.nonvanishing = sr.c != 0;
            sr.c_divides_d = sr.c > 0 && group.d() % sr.c == 0;
          }
        }
      }
    }
    if (!sr.nonvanishing) {
      throw VerificationFailure("restriction of f_" + std::to_string(k) + " to support " +
                                format_subset(support) + " is not a non-zero multiple of m_S (got " +
                                fam.rep.format(restricted) + ")");
    }
    r.restrictions.push_back(std::move(sr));
  }

  r.lower_bound = sigma_abelian(AbelianGroup::cyclic(group.p()));
  r.sigma = r.upper_bound == r.lower_bound ? r.lower_bound : 0;
  r.smallest_prime = smallest_prime_divisor(group.order());
  r.order_bound_holds = r.sigma > 0 && r.sigma * r.smallest_prime <= group.order();
  r.passed = r.all_invariant && r.degrees_within_p && r.sigma == group.p() && r.order_bound_holds;
  return r;
}

SigmaAz2Report verify_sigma_az2(std::int64_t n, std::int64_t e) {
  if (n < 2) throw DomainError("A = Z_n needs n >= 2");
  if (e < 1 || n % e != 0) {
    throw DomainError("character order " + std::to_string(e) + " does not divide " +
                      std::to_string(n));
  }
  if (n > 1000) throw CapacityError("conductor limited to 1000");
  const auto m = static_cast<int>(n);
  const std::int64_t a = n / e;
  MonomialAction diag{{0, 1}, {a, n - a}};
  MonomialAction swap{{1, 0}, {0, 0}};
  const MonomialRep rep(2, m, {diag, swap}, 2 * e, {"x", "y"},
                        "Z" + std::to_string(n) + " x| Z2 (character order " + std::to_string(e) +
                            ")");

  SigmaAz2Report r;
  r.n = n;
  r.e = e;
  r.rep = rep.label();
  const auto ie = static_cast<int>(e);
  const MultiPoly p1 = MultiPoly::monomial(2, m, {ie, 0}) + MultiPoly::monomial(2, m, {0, ie});
  const MultiPoly p2 = MultiPoly::monomial(2, m, {1, 1});
  r.invariants = {rep.format(p1), rep.format(p2)};
  r.invariant = rep.is_invariant(p1) && rep.is_invariant(p2);

  // For each support some invariant restricts to a single non-constant term,
  // so no point with that support is a common zero.
  r.zero_locus_trivial = true;
  const std::vector<std::vector<std::size_t>> supports{{0}, {1}, {0, 1}};
  for (const auto& s : supports) {
    bool certified = false;
    for (const auto* f : {&p1, &p2}) {
      const MultiPoly g = restrict_to_support(*f, s);
      if (g.size() == 1 && g.degree() > 0) certified = true;
    }
    r.zero_locus_trivial = r.zero_locus_trivial && certified;
  }
  r.bound = std::max<std::int64_t>(e, 2);
  r.passed = r.invariant && r.zero_locus_trivial;
  return r;
}

}  // namespace zsl
