#include "zsl/harness.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "zsl/errors.hpp"

namespace zsl {

using nlohmann::json;

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in group spec \"" + std::string(text_) + "\"", pos_);
  }

  bool at_end() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1000000000) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  GroupSpec group() {
    if (accept("SD(")) {
      const std::int64_t p = integer();
      expect(",");
      const std::int64_t d = integer();
      expect(",");
      const std::int64_t e = integer();
      expect(")");
      return SemidirectGroup(p, d, e);
    }
    std::vector<std::int64_t> orders;
    do {
      expect("Z");
      const std::size_t at = pos_;
      const std::int64_t n = integer();
      if (n < 1) {
        pos_ = at;
        fail("cyclic order must be positive");
      }
      orders.push_back(n);
    } while (accept("x"));
    return CyclicProduct(orders).group();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_groupspec(std::string_view text) {
  SpecParser p(text);
  GroupSpec g = p.group();
  if (!p.at_end()) p.fail("trailing characters");
  return g;
}

AbelianGroup parse_abelian(std::string_view text) {
  GroupSpec g = parse_groupspec(text);
  if (auto* a = std::get_if<AbelianGroup>(&g)) return *a;
  throw DomainError("expected an abelian group spec, got " + std::string(text));
}

SemidirectGroup parse_semidirect(std::string_view text) {
  GroupSpec g = parse_groupspec(text);
  if (auto* s = std::get_if<SemidirectGroup>(&g)) return *s;
  throw DomainError("expected SD(p,d,e), got " + std::string(text));
}

std::string groupspec_string(const GroupSpec& g) {
  return std::visit([](const auto& x) { return x.to_string(); }, g);
}

MonomialRep parse_repspec(std::string_view text, const SearchLimits& limits) {
  auto inner = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    if (text.empty() || text.back() != ')') {
      throw ParseError("expected ')' in rep spec \"" + std::string(text) + "\"", text.size());
    }
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  if (auto g = inner("reg(")) return regular_representation(parse_abelian(*g), limits);
  if (auto g = inner("ind(")) return induced_module(parse_semidirect(*g));
  throw ParseError("rep spec must be reg(...) or ind(SD(...)), got \"" + std::string(text) + "\"",
                   0);
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    std::int64_t v = 0;
    bool negative = false;
    if (text[pos] == '-') {
      negative = true;
      ++pos;
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > 1000000000) throw ParseError("integer too large", start);
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start || (negative && pos == start + 1)) throw ParseError("expected integer", pos);
    out.push_back(negative ? -v : v);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
    if (pos == text.size()) throw ParseError("expected integer", pos);
  }
  if (out.empty()) throw ParseError("empty list", 0);
  return out;
}

json to_json(const AbelianGroup& g) {
  return {{"spec", g.to_string()}, {"invariant_factors", g.invariant_factors()},
          {"order", g.order()}, {"exponent", g.exponent()}};
}

json to_json(const Sequence& s) {
  return {{"elements", s.to_string()}, {"length", s.length()}};
}

json to_json(const DavenportReport& r) {
  return {{"group", to_json(r.group)},
          {"k", r.k},
          {"D_k", r.value_Dk},
          {"d_k", r.value_dk},
          {"extremal_witness", to_json(r.extremal_witness)},
          {"search_stats",
           {{"sequences_enumerated", r.search_stats.sequences_enumerated},
            {"canonical_sequences", r.search_stats.canonical_sequences},
            {"memo_states", r.search_stats.memo_states},
            {"automorphisms_used", r.search_stats.automorphisms_used},
            {"wall_seconds", r.search_stats.wall_seconds}}}};
}

json to_json(const LinearityProfile& p) {
  json table = json::array();
  for (const auto& [k, D] : p.table) table.push_back({{"k", k}, {"D_k", D}});
  return {{"group", to_json(p.group)}, {"slope", p.slope},   {"k0", p.k0},
          {"D0", p.D0},                {"status", p.status()}, {"table", table}};
}

json to_json(const RelationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"relation", c.relation}, {"instance", c.instance}, {"passed", c.passed}});
  }
  return {{"passed", r.passed()}, {"checks", checks}};
}

json to_json(const SupportLemmaResult& r) {
  return {{"p", r.p},
          {"support", r.support},
          {"sequence", to_json(r.sequence)},
          {"support_sums_to_zero", r.support_sums_to_zero},
          {"n_values", r.n_values},
          {"n_min", r.n_min},
          {"raised_element", r.raised_element},
          {"claims_hold", support_lemma_claims_hold(r)}};
}

json to_json(const ProductBoundReport& r) {
  std::vector<std::string> entries;
  for (const auto& x : r.witness.entries) entries.push_back(r.product.format_element(x));
  return {{"G", r.g.to_string()},
          {"H", r.h.to_string()},
          {"product", r.product.to_string()},
          {"r", r.r},
          {"s", r.s},
          {"D_r(G)", r.D_r_g},
          {"D_s(H)", r.D_s_h},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"witness", entries},
          {"witness_kmax", r.witness_kmax},
          {"witness_ok", r.witness_ok},
          {"passed", r.passed},
          {"tight", r.tight}};
}

json to_json(const BetaReport& r) {
  json table = json::array();
  for (const auto& row : r.table) {
    table.push_back({{"d", row.degree}, {"dim_R_d", row.dim_component},
                     {"dim_quotient", row.dim_quotient}});
  }
  return {{"rep", r.rep},       {"k", r.k},       {"beta_1", r.beta1},
          {"cutoff", r.cutoff}, {"beta_k", r.value}, {"witness", r.witness_text},
          {"table", table}};
}

json to_json(const CrossCheckReport& r) {
  return {{"group", r.group.to_string()}, {"k", r.k}, {"beta_k", r.beta},
          {"D_k", r.davenport}, {"passed", r.passed}};
}

json to_json(const SigmaZpZdReport& r) {
  json restrictions = json::array();
  for (const auto& s : r.restrictions) {
    auto one_based = [](const std::vector<std::size_t>& v) {
      std::vector<std::size_t> out;
      for (auto i : v) out.push_back(i + 1);
      return out;
    };
    restrictions.push_back({{"support", one_based(s.support)},
                            {"representative", one_based(s.representative)},
                            {"c", s.c},
                            {"c_divides_d", s.c_divides_d},
                            {"nonvanishing", s.nonvanishing}});
  }
  return {{"group", r.group.to_string()},
          {"f", r.f_text},
          {"degrees", r.f_degrees},
          {"all_invariant", r.all_invariant},
          {"degrees_within_p", r.degrees_within_p},
          {"restrictions", restrictions},
          {"upper_bound", r.upper_bound},
          {"lower_bound", r.lower_bound},
          {"sigma", r.sigma},
          {"smallest_prime", r.smallest_prime},
          {"order_bound_holds", r.order_bound_holds},
          {"passed", r.passed}};
}

json to_json(const SigmaAz2Report& r) {
  return {{"n", r.n},
          {"e", r.e},
          {"rep", r.rep},
          {"invariants", r.invariants},
          {"invariant", r.invariant},
          {"zero_locus_trivial", r.zero_locus_trivial},
          {"sigma_bound", r.bound},
          {"passed", r.passed}};
}

json to_json(const PresentedBetaReport& r) {
  json table = json::array();
  for (const auto& [d, q] : r.table) table.push_back({{"d", d}, {"dim_quotient", q}});
  return {{"k", r.k},           {"cutoff", r.cutoff},   {"beta_k", r.value},
          {"status", r.status}, {"witness", r.witness}, {"table", table}};
}

json envelope(std::string_view command, json payload) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"result", std::move(payload)}};
}

std::string dk_table_csv(const std::vector<DavenportReport>& rows) {
  std::ostringstream out;
  out << "k,D_k,d_k,witness\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.value_Dk << ',' << r.value_dk << ",\"" << r.extremal_witness.to_string()
        << "\"\n";
  }
  return out.str();
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

int SuiteReport::count(CheckStatus s) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

json SuiteReport::to_json(bool include_timings) const {
  json checks_json = json::array();
  json timings = json::object();
  for (const auto& c : checks) {
    checks_json.push_back({{"id", c.id},
                           {"name", c.name},
                           {"title", c.title},
                           {"status", status_name(c.status)},
                           {"detail", c.detail},
                           {"evidence", c.evidence}});
    timings[c.name] = c.seconds;
  }
  json out = {{"schema_version", kSchemaVersion},
              {"command", "verify-all"},
              {"summary",
               {{"passed", count(CheckStatus::Pass)},
                {"failed", count(CheckStatus::Fail)},
                {"skipped", count(CheckStatus::Skipped)}}},
              {"checks", checks_json}};
  if (include_timings) out["timings"] = timings;
  return out;
}

namespace {

struct Outcome {
  bool pass = true;
  bool ran = false;  // at least one instance executed
  std::vector<std::string> problems;
  json evidence = json::object();

  void require(bool ok, const std::string& what) {
    ran = true;
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

class Suite {
 public:
  Suite(const VerifyConfig& config, SearchLimits limits)
      : config_(config), limits_(limits), cache_(limits) {}

  bool allowed(const std::string& spec) const {
    return config_.groups.empty() ||
           std::find(config_.groups.begin(), config_.groups.end(), spec) != config_.groups.end();
  }
  bool allowed(const AbelianGroup& g) const { return allowed(g.to_string()); }
  bool unfiltered() const { return config_.groups.empty(); }

  // Golden values pass through here; the faulted check sees its first one
  // shifted by one.
  std::int64_t golden(std::int64_t v) {
    if (faulted_) {
      faulted_ = false;
      return v + 1;
    }
    return v;
  }

  void begin(const std::string& name) { faulted_ = config_.inject_fault == name; }

  DavenportCache& cache() { return cache_; }
  const SearchLimits& limits() const { return limits_; }
  std::uint64_t seed() const { return config_.seed; }

  std::map<std::string, LinearityProfile> profiles;

 private:
  const VerifyConfig& config_;
  SearchLimits limits_;
  DavenportCache cache_;
  bool faulted_ = false;
};

AbelianGroup G(std::vector<std::int64_t> factors) { return AbelianGroup(std::move(factors)); }

std::string eq(const std::string& what, std::int64_t got, std::int64_t want) {
  return what + " = " + std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

void check_davenport_baselines(Suite& s, Outcome& out) {
  std::vector<std::pair<AbelianGroup, std::int64_t>> cases;
  for (std::int64_t n = 2; n <= 7; ++n) cases.emplace_back(AbelianGroup::cyclic(n), n);
  cases.emplace_back(G({2, 2}), 3);
  cases.emplace_back(G({3, 3}), 5);
  cases.emplace_back(G({2, 4}), 5);
  for (const auto& [g, want] : cases) {
    if (!s.allowed(g)) continue;
    const auto r = s.cache().davenport_k(g, 1);
    const auto expected = s.golden(want);
    const bool witness_ok = k_max_reference(r.extremal_witness) == 0 &&
                            static_cast<std::int64_t>(r.extremal_witness.length()) == r.value_dk;
    out.require(r.value_Dk == expected, eq("D(" + g.to_string() + ")", r.value_Dk, expected));
    out.require(witness_ok, "witness for " + g.to_string() + " failed oracle re-verification");
    out.evidence[g.to_string()] = {{"D", r.value_Dk}, {"witness", r.extremal_witness.to_string()}};
  }
}

void check_generalized_constants(Suite& s, Outcome& out) {
  struct Case {
    AbelianGroup g;
    std::int64_t slope, offset;
  };
  const std::vector<Case> cases{{G({3}), 3, 0}, {G({2}), 2, 0}, {G({2, 2}), 2, 1}};
  for (const auto& c : cases) {
    if (!s.allowed(c.g)) continue;
    json row = json::array();
    for (int k = 1; k <= 4; ++k) {
      const auto r = s.cache().davenport_k(c.g, k);
      const auto want = s.golden(c.slope * k + c.offset);
      out.require(r.value_Dk == want,
                  eq("D_" + std::to_string(k) + "(" + c.g.to_string() + ")", r.value_Dk, want));
      row.push_back(r.value_Dk);
    }
    out.evidence[c.g.to_string()] = row;
  }
}

void check_linearity(Suite& s, Outcome& out) {
  for (const auto& g : {G({2}), G({3}), G({4}), G({2, 2}), G({6})}) {
    if (!s.allowed(g)) continue;
    const auto p = linearity_profile(s.cache().engine(g), 4);
    s.profiles.emplace(g.to_string(), p);
    const auto want = s.golden(g.exponent());
    const auto last = p.table.back().second - p.table[p.table.size() - 2].second;
    out.require(p.stabilized, g.to_string() + " did not stabilize within k <= 4");
    out.require(last == want, eq("slope of " + g.to_string(), last, want));
    for (std::size_t i = 0; i + 1 < p.table.size(); ++i) {
      if (p.table[i].first < p.k0) continue;
      const auto inc = p.table[i + 1].second - p.table[i].second;
      out.require(inc <= g.exponent(), "increment " + std::to_string(inc) + " exceeds exp(" +
                                           g.to_string() + ")");
    }
    out.evidence[g.to_string()] = to_json(p);
  }
}

void check_inequalities(Suite& s, Outcome& out) {
  const std::vector<AbelianGroup> groups{G({2}), G({3}), G({4}),    G({5}),   G({6}),
                                         G({7}), G({2, 2}), G({2, 4}), G({3, 3})};
  std::int64_t violations = 0;
  std::int64_t instances = 0;
  bool any = false;
  for (const auto& g : groups) {
    if (!s.allowed(g)) continue;
    any = true;
    auto it = s.profiles.find(g.to_string());
    if (it == s.profiles.end()) {
      it = s.profiles.emplace(g.to_string(), linearity_profile(s.cache().engine(g), 4)).first;
    }
    const auto rep = verify_inequalities(it->second);
    for (const auto& c : rep.checks) {
      ++instances;
      if (!c.passed) {
        ++violations;
        out.problems.push_back(g.to_string() + ": " + c.instance);
      }
    }
  }
  if (!any) return;
  const auto want = s.golden(0);
  out.require(violations == want, eq("violations", violations, want));
  out.evidence = {{"instances", instances}, {"violations", violations}};
}

void check_product_bound(Suite& s, Outcome& out) {
  const std::vector<std::pair<AbelianGroup, AbelianGroup>> pairs{
      {G({2}), G({2})}, {G({2}), G({3})}, {G({3}), G({3})}};
  json rows = json::array();
  for (const auto& [g, h] : pairs) {
    if (!s.allowed(g) || !s.allowed(h)) continue;
    for (int r = 1; r <= 2; ++r) {
      for (int t = 1; t <= 2; ++t) {
        const auto rep = verify_direct_product_bound(g, h, r, t, s.cache());
        const std::string tag =
            g.to_string() + "," + h.to_string() + ",r=" + std::to_string(r) + ",s=" + std::to_string(t);
        out.require(rep.witness_ok, tag + ": witness failed oracle re-verification");
        out.require(rep.passed, tag + ": " + std::to_string(rep.lhs) + " < " + std::to_string(rep.rhs));
        if (g == G({2}) && h == G({2}) && r == 1 && t == 2) {
          const auto want = s.golden(5);
          out.require(rep.tight && rep.lhs == want, eq(tag + " (tight instance) lhs", rep.lhs, want));
        }
        rows.push_back({{"instance", tag}, {"lhs", rep.lhs}, {"rhs", rep.rhs},
                        {"witness_kmax", rep.witness_kmax}, {"tight", rep.tight}});
      }
    }
  }
  if (!rows.empty()) out.evidence["instances"] = rows;
}

void check_support_lemma(Suite& s, Outcome& out) {
  json per_p = json::object();
  std::int64_t failures = 0;
  bool any = false;
  for (std::int64_t p : {3, 5, 7, 11}) {
    if (!s.allowed(AbelianGroup::cyclic(p))) continue;
    any = true;
    std::int64_t subsets = 0;
    for (std::uint32_t mask = 1; mask < (1u << (p - 1)); ++mask) {
      std::vector<std::int64_t> support;
      for (std::int64_t x = 1; x < p; ++x) {
        if (mask & (1u << (x - 1))) support.push_back(x);
      }
      const auto r = zero_sum_with_support(p, support);
      ++subsets;
      if (!support_lemma_claims_hold(r)) {
        ++failures;
        if (out.problems.size() < 5) out.problems.push_back("p=" + std::to_string(p) + " S=" + r.sequence.to_string());
      }
    }
    per_p[std::to_string(p)] = subsets;
  }
  if (!any) return;
  const auto want = s.golden(0);
  out.require(failures == want, eq("failures", failures, want));
  out.evidence = {{"subsets_checked", per_p}, {"failures", failures}};
}

void check_crosscheck(Suite& s, Outcome& out) {
  struct Case {
    AbelianGroup g;
    int k;
    std::int64_t want;
  };
  const std::vector<Case> cases{
      {G({2}), 1, 2}, {G({2}), 2, 4}, {G({3}), 1, 3}, {G({3}), 2, 6}, {G({2, 2}), 1, 3}};
  for (const auto& c : cases) {
    if (!s.allowed(c.g)) continue;
    const auto beta = beta_k(regular_representation(c.g, s.limits()), c.k, s.limits());
    const auto dav = s.cache().davenport_k(c.g, c.k).value_Dk;
    const auto want = s.golden(c.want);
    const std::string tag = "(" + c.g.to_string() + ",k=" + std::to_string(c.k) + ")";
    out.require(beta.value == dav, tag + ": beta_k = " + std::to_string(beta.value) +
                                       " but D_k = " + std::to_string(dav));
    out.require(dav == want, eq(tag + " D_k", dav, want));
    out.evidence[tag] = {{"beta_k", beta.value}, {"D_k", dav}, {"witness", beta.witness_text}};
  }
}

void check_example_ring(Suite& s, Outcome& out) {
  if (!s.unfiltered()) return;
  auto ring = PresentedGradedAlgebra::parse("a:1,b:3", "b^3-a^9, a*b^2-a^7", 30, s.limits());
  json betas = json::object();
  {
    const auto r = beta_k_presented(ring, 1, 30);
    out.require(r.value == 3, eq("beta_1", r.value, 3));
    betas["1"] = r.value;
  }
  for (int k = 2; k <= 4; ++k) {
    const auto r = beta_k_presented(ring, k, 30);
    const auto want = s.golden(6);
    out.require(r.value == want, eq("beta_" + std::to_string(k), r.value, want));
    betas[std::to_string(k)] = r.value;
  }
  const auto b2 = ring.element("b^2");
  const bool in2 = ring.in_power(b2, 2);
  const bool in3 = ring.in_power(b2, 3);
  out.require(in2 && !in3, "b^2 should lie in R_+^2 but not in R_+^3");
  const auto layer = ring.layer_dimension(2, 4, 6);
  out.require(layer == 1 && !ring.in_power(b2, 4),
              "b^2 should span degree 6 of R_+^2 / R_+^4 (layer dimension " +
                  std::to_string(layer) + ")");
  bool window = true;
  for (int l = 7; l <= 30; ++l) {
    if (ring.outside_power(5, l)) {
      window = false;
      out.problems.push_back("R_" + std::to_string(l) + " not inside R_+^5");
    }
  }
  out.require(window, "R_l inside R_+^5 for 7 <= l <= 30");
  out.require(ring.dimension(3) == 2 && ring.dimension(9) == 2 && ring.dimension(0) == 1,
              "degree dimensions 0, 3, 9 should be 1, 2, 2");
  out.evidence = {{"beta", betas},
                  {"status", "verified-up-to-cutoff"},
                  {"cutoff", 30},
                  {"b2_in_R+^2", in2},
                  {"b2_in_R+^3", in3},
                  {"layer_dim_deg6_R+^2/R+^4", layer},
                  {"R_l_in_R+^5_for_7..30", window}};
}

void check_sigma_zpzd(Suite& s, Outcome& out) {
  for (const auto& [p, d, e] : std::vector<std::array<std::int64_t, 3>>{
           {3, 2, 2}, {5, 2, 4}, {5, 4, 2}, {7, 3, 2}}) {
    const SemidirectGroup g(p, d, e);
    if (!s.allowed(g.to_string())) continue;
    const auto r = verify_sigma_zpzd(g);
    const auto want = s.golden(p);
    out.require(r.all_invariant, g.to_string() + ": some f_k not invariant");
    out.require(r.degrees_within_p, g.to_string() + ": some deg f_k exceeds p");
    out.require(r.sigma == want, eq("sigma(" + g.to_string() + ")", r.sigma, want));
    json cs = json::array();
    for (const auto& sr : r.restrictions) cs.push_back(sr.c);
    out.evidence[g.to_string()] = {{"f", r.f_text}, {"sigma", r.sigma}, {"restriction_constants", cs}};
  }
}

void check_sigma_az2(Suite& s, Outcome& out) {
  json rows = json::array();
  for (std::int64_t n = 3; n <= 8; ++n) {
    if (!s.allowed(AbelianGroup::cyclic(n))) continue;
    for (std::int64_t e = 2; e <= n; ++e) {
      if (n % e) continue;
      const auto r = verify_sigma_az2(n, e);
      const auto want = s.golden(std::max<std::int64_t>(e, 2));
      const std::string tag = "n=" + std::to_string(n) + ",e=" + std::to_string(e);
      out.require(r.passed, tag + ": invariance or zero-locus certificate failed");
      out.require(r.bound == want, eq(tag + " bound", r.bound, want));
      rows.push_back({{"n", n}, {"e", e}, {"bound", r.bound}});
    }
  }
  if (!rows.empty()) out.evidence["instances"] = rows;
}

void check_order_bound(Suite& s, Outcome& out) {
  std::int64_t violations = 0;
  json rows = json::array();
  bool any = false;
  for (const auto& g : {G({2, 2}), G({3, 3}), G({2, 4})}) {
    if (!s.allowed(g)) continue;
    any = true;
    const auto q = smallest_prime_divisor(g.order());
    const bool ok = sigma_abelian(g) * q <= g.order();
    if (!ok) ++violations;
    rows.push_back({{"group", g.to_string()}, {"sigma", sigma_abelian(g)}, {"bound", g.order() / q}});
  }
  for (const auto& [p, d, e] : std::vector<std::array<std::int64_t, 3>>{
           {3, 2, 2}, {5, 2, 4}, {5, 4, 2}, {7, 3, 2}}) {
    const SemidirectGroup g(p, d, e);
    if (!s.allowed(g.to_string())) continue;
    any = true;
    const auto q = smallest_prime_divisor(g.order());
    if (p * q > g.order()) ++violations;
    rows.push_back({{"group", g.to_string()}, {"sigma", p}, {"bound", g.order() / q}});
  }
  if (!any) return;
  const auto want = s.golden(0);
  out.require(violations == want, eq("violations", violations, want));
  out.evidence = {{"instances", rows}, {"violations", violations}};
}

void check_subquotient(Suite& s, Outcome& out) {
  const std::vector<std::pair<AbelianGroup, AbelianGroup>> pairs{
      {G({4}), G({2})}, {G({2, 2}), G({2})}, {G({6}), G({3})}};
  const std::vector<int> ks{1, 2};
  for (const auto& [a, b] : pairs) {
    if (!s.allowed(a) || !s.allowed(b)) continue;
    auto rep = verify_subgroup_relations(a, b, ks, s.cache());
    if (s.golden(0) != 0) rep.checks.front().passed = false;
    for (const auto& c : rep.checks) out.require(c.passed, c.instance);
    out.evidence[a.to_string() + ">" + b.to_string()] = to_json(rep);
  }
}

void check_engine_vs_oracle(Suite& s, Outcome& out) {
  std::vector<AbelianGroup> pool;
  for (std::int64_t n = 2; n <= 9; ++n) pool.push_back(AbelianGroup::cyclic(n));
  for (const auto& g : {G({2, 2}), G({2, 4}), G({3, 3})}) pool.push_back(g);
  std::erase_if(pool, [&](const AbelianGroup& g) { return !s.allowed(g); });
  if (pool.empty()) return;

  std::mt19937_64 rng(s.seed());
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto random_sequence = [&](const AbelianGroup& g, std::int64_t max_len) {
    Sequence seq(g);
    const auto len = uniform(0, max_len);
    for (std::int64_t i = 0; i < len; ++i) seq.insert(g.element_at(uniform(0, g.order() - 1)));
    return seq;
  };

  std::int64_t kmax_discrepancies = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& g = pool[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
    const Sequence seq = random_sequence(g, 8);
    const auto fast = k_max_with_witness(seq);
    const auto slow = k_max_reference(seq);
    if (fast.value != slow || !is_valid_packing(seq, fast.witness) ||
        fast.witness.blocks.size() != fast.value) {
      ++kmax_discrepancies;
      if (out.problems.size() < 5) {
        out.problems.push_back(g.to_string() + " " + seq.to_string() + ": engine " +
                               std::to_string(fast.value) + ", oracle " + std::to_string(slow));
      }
    }
  }

  std::int64_t orbit_discrepancies = 0;
  std::int64_t images = 0;
  std::map<std::string, std::vector<Automorphism>> auts;
  for (int i = 0; i < 100; ++i) {
    const auto& g = pool[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
    auto& a = auts[g.to_string()];
    if (a.empty()) a = automorphism_group(g, s.limits());
    const Sequence seq = random_sequence(g, 7);
    const auto base = k_max(seq);
    const Sequence canon = canonical_form(seq, a);
    for (const auto& phi : a) {
      Sequence img(g);
      for (const auto& x : seq.elements()) img.insert(phi.apply(g, x));
      ++images;
      if (k_max(img) != base || canonical_form(img, a) != canon) ++orbit_discrepancies;
    }
    if (k_max(canon) != base) ++orbit_discrepancies;
  }
  const auto want = s.golden(0);
  out.require(kmax_discrepancies + orbit_discrepancies == want,
              eq("discrepancies", kmax_discrepancies + orbit_discrepancies, want));
  out.evidence = {{"random_sequences", 500},
                  {"kmax_discrepancies", kmax_discrepancies},
                  {"orbit_sequences", 100},
                  {"orbit_images", images},
                  {"orbit_discrepancies", orbit_discrepancies}};
}

struct CheckDef {
  const char* name;
  const char* title;
  void (*run)(Suite&, Outcome&);
};

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs{
      {"davenport-baselines", "D(A) for small groups", check_davenport_baselines},
      {"generalized-constants", "D_k for Z2, Z3, Z2xZ2 up to k = 4", check_generalized_constants},
      {"eventual-linearity", "slope exp(A) of k -> D_k", check_linearity},
      {"inequality-suite", "k/r, k exp(A), k D_1 and step inequalities", check_inequalities},
      {"product-bound", "D_{r+s-1}(GxH) >= D_r(G) + D_s(H) - 1", check_product_bound},
      {"support-lemma", "zero-sum sequences with prescribed support over Z_p", check_support_lemma},
      {"beta-davenport-crosscheck", "beta_k(A) = D_k(A) by two engines", check_crosscheck},
      {"example-ring", "beta_k of a[1], b[3] / (b^3 - a^9, ab^2 - a^7)", check_example_ring},
      {"sigma-zpzd", "sigma(Z_p x| Z_d) = p", check_sigma_zpzd},
      {"sigma-az2", "x^e + y^e and xy for Z_n x| Z_2", check_sigma_az2},
      {"order-bound", "sigma(G) <= |G|/q", check_order_bound},
      {"subquotient", "exp/order monotonicity and D_k(A) <= D_{k[A:B]}(B)", check_subquotient},
      {"engine-vs-oracle", "k_max engine against the naive oracle", check_engine_vs_oracle},
  };
  return defs;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : checks()) out.emplace_back(c.name);
  return out;
}

SuiteReport verify_all(const VerifyConfig& config) {
  if (!(config.budget_seconds > 0)) throw DomainError("budget must be positive");
  if (!config.inject_fault.empty()) {
    const auto names = check_names();
    if (std::find(names.begin(), names.end(), config.inject_fault) == names.end()) {
      throw DomainError("unknown check '" + config.inject_fault + "'");
    }
  }
  const SearchLimits limits = SearchLimits::with_budget(config.budget_seconds);
  Suite suite(config, limits);
  SuiteReport report;
  int id = 0;
  for (const auto& def : checks()) {
    CheckResult result;
    result.id = ++id;
    result.name = def.name;
    result.title = def.title;
    if (limits.expired()) {
      result.status = CheckStatus::Skipped;
      result.detail = "time budget exhausted before the check started";
      report.checks.push_back(std::move(result));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    suite.begin(def.name);
    Outcome out;
    try {
      def.run(suite, out);
      if (!out.ran) {
        result.status = CheckStatus::Skipped;
        result.detail = "no instances selected by the group filter";
      } else if (out.pass) {
        result.status = CheckStatus::Pass;
        result.detail = "ok";
      } else {
        result.status = CheckStatus::Fail;
      }
    } catch (const CapacityError& e) {
      result.status = limits.expired() ? CheckStatus::Skipped : CheckStatus::Fail;
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.status = CheckStatus::Fail;
      result.detail = e.what();
    }
    if (result.status == CheckStatus::Fail && !out.problems.empty()) {
      std::string joined;
      for (std::size_t i = 0; i < out.problems.size() && i < 5; ++i) {
        if (i) joined += "; ";
        joined += out.problems[i];
      }
      result.detail = result.detail.empty() ? joined : result.detail + "; " + joined;
    }
    result.evidence = std::move(out.evidence);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace zsl
