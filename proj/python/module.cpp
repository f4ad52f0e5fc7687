#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zsl/errors.hpp"
#include "zsl/harness.hpp"

namespace py = pybind11;

namespace {

zsl::SearchLimits budget(double seconds) { return zsl::SearchLimits::with_budget(seconds); }

std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_zsl, m) {
  m.doc() = "Zero-sum invariants: Davenport constants and Noether numbers (JSON in, JSON out)";
  m.attr("schema_version") = zsl::kSchemaVersion;

  static py::exception<zsl::Error> base(m, "ZslError");
  static py::exception<zsl::CapacityError> capacity(m, "CapacityError", base.ptr());
  static py::exception<zsl::VerificationFailure> verification(m, "VerificationFailure", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const zsl::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const zsl::ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const zsl::DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const zsl::CapacityError& e) {
      py::set_error(capacity, e.what());
    } catch (const zsl::VerificationFailure& e) {
      py::set_error(verification, e.what());
    } catch (const zsl::Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("davenport", [](const std::string& group, int k, double seconds) {
    py::gil_scoped_release nogil;
    return dump(zsl::to_json(zsl::davenport_k(zsl::parse_abelian(group), k, budget(seconds))));
  }, py::arg("group"), py::arg("k") = 1, py::arg("budget_seconds") = 600.0);

  m.def("dk_table", [](const std::string& group, int k_upto, double seconds) {
    py::gil_scoped_release nogil;
    zsl::DavenportEngine engine(zsl::parse_abelian(group), budget(seconds));
    auto arr = nlohmann::json::array();
    for (int k = 1; k <= k_upto; ++k) arr.push_back(zsl::to_json(engine.davenport_k(k)));
    return dump(arr);
  }, py::arg("group"), py::arg("k_upto") = 4, py::arg("budget_seconds") = 600.0);

  m.def("eta", [](const std::string& group, double seconds) {
    return zsl::eta(zsl::parse_abelian(group), budget(seconds));
  }, py::arg("group"), py::arg("budget_seconds") = 600.0);

  m.def("linearity", [](const std::string& group, int k_upto, double seconds) {
    py::gil_scoped_release nogil;
    const auto p = zsl::linearity_profile(zsl::parse_abelian(group), k_upto, budget(seconds));
    auto j = zsl::to_json(p);
    j["inequalities"] = zsl::to_json(zsl::verify_inequalities(p));
    return dump(j);
  }, py::arg("group"), py::arg("k_upto") = 4, py::arg("budget_seconds") = 600.0);

  m.def("support_lemma", [](std::int64_t p, std::vector<std::int64_t> support) {
    return dump(zsl::to_json(zsl::zero_sum_with_support(p, support)));
  }, py::arg("p"), py::arg("support"));

  m.def("product_bound", [](const std::string& g, const std::string& h, int r, int s) {
    py::gil_scoped_release nogil;
    return dump(zsl::to_json(
        zsl::verify_direct_product_bound(zsl::parse_abelian(g), zsl::parse_abelian(h), r, s)));
  }, py::arg("g"), py::arg("h"), py::arg("r") = 1, py::arg("s") = 1);

  m.def("beta", [](const std::string& rep, int k, double seconds) {
    py::gil_scoped_release nogil;
    const auto limits = budget(seconds);
    return dump(zsl::to_json(zsl::beta_k(zsl::parse_repspec(rep, limits), k, limits)));
  }, py::arg("rep"), py::arg("k") = 1, py::arg("budget_seconds") = 600.0);

  m.def("crosscheck", [](const std::string& group, int k) {
    py::gil_scoped_release nogil;
    return dump(zsl::to_json(zsl::verify_beta_equals_davenport(zsl::parse_abelian(group), k)));
  }, py::arg("group"), py::arg("k") = 1);

  m.def("sigma_zpzd", [](const std::string& group) {
    py::gil_scoped_release nogil;
    return dump(zsl::to_json(zsl::verify_sigma_zpzd(zsl::parse_semidirect(group))));
  }, py::arg("group"));

  m.def("sigma_az2", [](std::int64_t n, std::int64_t e) {
    return dump(zsl::to_json(zsl::verify_sigma_az2(n, e)));
  }, py::arg("n"), py::arg("e"));

  m.def("ring_beta", [](const std::string& gens, const std::string& rels, int k, int cutoff) {
    py::gil_scoped_release nogil;
    auto ring = zsl::PresentedGradedAlgebra::parse(gens, rels, cutoff);
    return dump(zsl::to_json(zsl::beta_k_presented(ring, k, cutoff)));
  }, py::arg("gens"), py::arg("rels") = "", py::arg("k") = 1, py::arg("cutoff") = 30);

  m.def("verify_all", [](std::vector<std::string> groups, std::string fault, bool timings) {
    py::gil_scoped_release nogil;
    zsl::VerifyConfig config;
    for (const auto& g : groups) config.groups.push_back(zsl::groupspec_string(zsl::parse_groupspec(g)));
    config.inject_fault = std::move(fault);
    return dump(zsl::verify_all(config).to_json(timings));
  }, py::arg("groups") = std::vector<std::string>{}, py::arg("inject_fault") = "",
     py::arg("timings") = false);
}
