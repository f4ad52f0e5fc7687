#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zsl/errors.hpp"
#include "zsl/harness.hpp"

using nlohmann::json;

namespace {

struct Common {
  std::string format = "json";
  double budget = 600.0;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--budget-seconds", c.budget, "Wall-clock budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to FILE instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw zsl::DomainError("cannot open " + c.out + " for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(const Common& c, std::string_view command, json payload) {
  emit(c, zsl::envelope(command, std::move(payload)).dump(2));
}

void require_json(const Common& c, const std::string& command) {
  if (c.format != "json") {
    throw zsl::DomainError("csv output is only available for table commands, not " + command);
  }
}

zsl::SearchLimits limits_of(const Common& c) { return zsl::SearchLimits::with_budget(c.budget); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-sum invariants of finite groups: Davenport constants, Noether numbers"};
  app.require_subcommand(1);

  Common common;
  std::string group, group2, rep, gens, rels, p_text, support_text, groups_filter, fault;
  int k = 1, k_upto = 4, r = 1, s = 1, cutoff = 30;
  std::int64_t n = 0, e = 0;
  bool no_timings = false;

  auto* davenport = app.add_subcommand("davenport", "D_k(A) with an extremal witness");
  davenport->add_option("group", group, "Group spec, e.g. Z6 or Z2xZ4")->required();
  davenport->add_option("--k", k, "k")->check(CLI::PositiveNumber)->capture_default_str();

  auto* dk_table = app.add_subcommand("dk-table", "D_1..D_K");
  dk_table->add_option("group", group, "Group spec")->required();
  dk_table->add_option("--k-upto", k_upto, "K")->check(CLI::PositiveNumber)->capture_default_str();

  auto* eta = app.add_subcommand("eta", "Short zero-sum constant eta(A)");
  eta->add_option("group", group, "Group spec")->required();

  auto* linearity = app.add_subcommand("linearity", "Slope profile of k -> D_k");
  linearity->add_option("group", group, "Group spec")->required();
  linearity->add_option("--k-upto", k_upto, "K")->capture_default_str();

  auto* support = app.add_subcommand("support-lemma", "Zero-sum sequence over Z_p with given support");
  support->add_option("p", p_text, "Prime p")->required();
  support->add_option("support", support_text, "Elements s1,s2,...")->required();

  auto* product = app.add_subcommand("product-bound", "D_{r+s-1}(GxH) >= D_r(G) + D_s(H) - 1");
  product->add_option("G", group, "Group spec")->required();
  product->add_option("H", group2, "Group spec")->required();
  product->add_option("--r", r, "r")->check(CLI::PositiveNumber)->capture_default_str();
  product->add_option("--s", s, "s")->check(CLI::PositiveNumber)->capture_default_str();

  auto* beta = app.add_subcommand("beta", "beta_k of a monomial representation");
  beta->add_option("rep", rep, "reg(<group>) or ind(SD(p,d,e))")->required();
  beta->add_option("--k", k, "k")->check(CLI::PositiveNumber)->capture_default_str();

  auto* crosscheck = app.add_subcommand("crosscheck", "beta_k(reg A) against D_k(A)");
  crosscheck->add_option("group", group, "Group spec")->required();
  crosscheck->add_option("--k", k, "k")->check(CLI::PositiveNumber)->capture_default_str();

  auto* sigma_zpzd = app.add_subcommand("sigma-zpzd", "Invariants f_k and sigma for SD(p,d,e)");
  sigma_zpzd->add_option("group", group, "SD(p,d,e)")->required();

  auto* sigma_az2 = app.add_subcommand("sigma-az2", "x^e + y^e, xy for Z_n x| Z_2");
  sigma_az2->add_option("n", n, "n")->required();
  sigma_az2->add_option("e", e, "Order of the character")->required();

  auto* ring_beta = app.add_subcommand("ring-beta", "beta_k of a presented graded algebra");
  ring_beta->add_option("--gens", gens, "Generators, e.g. \"a:1,b:3\"")->required();
  ring_beta->add_option("--rels", rels, "Relations, e.g. \"b^3-a^9, a*b^2-a^7\"");
  ring_beta->add_option("--k", k, "k")->check(CLI::PositiveNumber)->capture_default_str();
  ring_beta->add_option("--cutoff", cutoff, "Degree window")->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify-all", "Run every verification check");
  verify->add_option("--groups", groups_filter, "Comma-separated group specs to keep");
  verify->add_option("--inject-fault", fault, "Shift a golden value in the named check");
  verify->add_flag("--no-timings", no_timings, "Omit the timings block");

  for (auto* cmd : app.get_subcommands({})) add_common(cmd, common);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto limits = limits_of(common);
    if (davenport->parsed()) {
      require_json(common, "davenport");
      emit_json(common, "davenport", zsl::to_json(zsl::davenport_k(zsl::parse_abelian(group), k, limits)));
    } else if (dk_table->parsed()) {
      zsl::DavenportEngine engine(zsl::parse_abelian(group), limits);
      std::vector<zsl::DavenportReport> rows;
      for (int i = 1; i <= k_upto; ++i) rows.push_back(engine.davenport_k(i));
      if (common.format == "csv") {
        emit(common, zsl::dk_table_csv(rows));
      } else {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(zsl::to_json(row));
        emit_json(common, "dk-table", arr);
      }
    } else if (eta->parsed()) {
      require_json(common, "eta");
      const auto g = zsl::parse_abelian(group);
      emit_json(common, "eta", {{"group", zsl::to_json(g)}, {"eta", zsl::eta(g, limits)}});
    } else if (linearity->parsed()) {
      const auto profile = zsl::linearity_profile(zsl::parse_abelian(group), k_upto, limits);
      if (common.format == "csv") {
        std::ostringstream csv;
        csv << "k,D_k\n";
        for (const auto& [kk, D] : profile.table) csv << kk << ',' << D << '\n';
        emit(common, csv.str());
      } else {
        json payload = zsl::to_json(profile);
        payload["inequalities"] = zsl::to_json(zsl::verify_inequalities(profile));
        emit_json(common, "linearity", payload);
      }
    } else if (support->parsed()) {
      require_json(common, "support-lemma");
      const auto p = zsl::parse_int_list(p_text);
      if (p.size() != 1) throw zsl::ParseError("expected a single prime", 0);
      const auto sset = zsl::parse_int_list(support_text);
      emit_json(common, "support-lemma", zsl::to_json(zsl::zero_sum_with_support(p[0], sset)));
    } else if (product->parsed()) {
      require_json(common, "product-bound");
      const auto rep_ = zsl::verify_direct_product_bound(zsl::parse_abelian(group),
                                                         zsl::parse_abelian(group2), r, s, limits);
      emit_json(common, "product-bound", zsl::to_json(rep_));
      return rep_.passed ? 0 : 1;
    } else if (beta->parsed()) {
      const auto report = zsl::beta_k(zsl::parse_repspec(rep, limits), k, limits);
      if (common.format == "csv") {
        std::ostringstream csv;
        csv << "d,dim_R_d,dim_quotient\n";
        for (const auto& row : report.table) {
          csv << row.degree << ',' << row.dim_component << ',' << row.dim_quotient << '\n';
        }
        emit(common, csv.str());
      } else {
        emit_json(common, "beta", zsl::to_json(report));
      }
    } else if (crosscheck->parsed()) {
      require_json(common, "crosscheck");
      const auto report = zsl::verify_beta_equals_davenport(zsl::parse_abelian(group), k, limits);
      emit_json(common, "crosscheck", zsl::to_json(report));
      return report.passed ? 0 : 1;
    } else if (sigma_zpzd->parsed()) {
      require_json(common, "sigma-zpzd");
      const auto report = zsl::verify_sigma_zpzd(zsl::parse_semidirect(group));
      emit_json(common, "sigma-zpzd", zsl::to_json(report));
      return report.passed ? 0 : 1;
    } else if (sigma_az2->parsed()) {
      require_json(common, "sigma-az2");
      const auto report = zsl::verify_sigma_az2(n, e);
      emit_json(common, "sigma-az2", zsl::to_json(report));
      return report.passed ? 0 : 1;
    } else if (ring_beta->parsed()) {
      auto ring = zsl::PresentedGradedAlgebra::parse(gens, rels, cutoff, limits);
      const auto report = zsl::beta_k_presented(ring, k, cutoff);
      if (common.format == "csv") {
        std::ostringstream csv;
        csv << "d,dim_quotient\n";
        for (const auto& [d, q] : report.table) csv << d << ',' << q << '\n';
        emit(common, csv.str());
      } else {
        emit_json(common, "ring-beta", zsl::to_json(report));
      }
    } else if (verify->parsed()) {
      zsl::VerifyConfig config;
      config.budget_seconds = common.budget;
      config.inject_fault = fault;
      if (!groups_filter.empty()) {
        std::stringstream ss(groups_filter);
        for (std::string item; std::getline(ss, item, ',');) {
          if (!item.empty()) config.groups.push_back(zsl::groupspec_string(zsl::parse_groupspec(item)));
        }
      }
      const auto report = zsl::verify_all(config);
      if (common.format == "csv") {
        std::ostringstream csv;
        csv << "id,name,status,seconds\n";
        for (const auto& c : report.checks) {
          csv << c.id << ',' << c.name << ',' << zsl::status_name(c.status) << ',' << c.seconds << '\n';
        }
        emit(common, csv.str());
      } else {
        emit(common, report.to_json(!no_timings).dump(2));
      }
      for (const auto& c : report.checks) {
        std::cerr << c.id << ". " << c.name << ": " << zsl::status_name(c.status);
        if (c.status != zsl::CheckStatus::Pass) std::cerr << " (" << c.detail << ")";
        std::cerr << '\n';
      }
      return report.any_failed() ? 1 : 0;
    }
  } catch (const zsl::CapacityError& err) {
    std::cerr << "capacity: " << err.what() << '\n';
    return 3;
  } catch (const zsl::VerificationFailure& err) {
    std::cerr << "verification failed: " << err.what() << '\n';
    return 1;
  } catch (const zsl::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
