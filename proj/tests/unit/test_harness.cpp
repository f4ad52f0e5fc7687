#include "doctest.h"
#include "zsl/errors.hpp"
#include "zsl/harness.hpp"

using namespace zsl;

TEST_SUITE("harness") {

TEST_CASE("group spec parsing") {
  CHECK(groupspec_string(parse_groupspec("Z6")) == "Z6");
  CHECK(groupspec_string(parse_groupspec("Z2xZ3")) == "Z6");
  CHECK(groupspec_string(parse_groupspec("Z4xZ2")) == "Z2xZ4");
  CHECK_THROWS_AS(parse_groupspec("Z2 xZ4"), ParseError);  // grammar has no whitespace
  CHECK(groupspec_string(parse_groupspec("SD(3,2,2)")) == "SD(3,2,2)");
  CHECK_THROWS_AS(parse_groupspec("Z"), ParseError);
  CHECK_THROWS_AS(parse_groupspec("Q8"), ParseError);
  CHECK_THROWS_AS(parse_groupspec("SD(4,2,3)"), ValidationError);
  CHECK_THROWS(parse_abelian("SD(3,2,2)"));
  try {
    parse_groupspec("Z2xY");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("representation specs") {
  CHECK(parse_repspec("reg(Z2xZ2)").nvars() == 4);
  CHECK(parse_repspec("ind(SD(5,4,2))").nvars() == 4);
  CHECK_THROWS(parse_repspec("foo(Z2)"));
  CHECK(parse_int_list("1,3,4") == std::vector<std::int64_t>{1, 3, 4});
}

TEST_CASE("json envelopes and csv") {
  auto r = davenport_k(AbelianGroup({3}), 2);
  auto j = envelope("davenport", to_json(r));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["command"] == "davenport");
  CHECK(j.dump().find("\"D_k\":6") != std::string::npos);
  auto csv = dk_table_csv({davenport_k(AbelianGroup({2}), 1), davenport_k(AbelianGroup({2}), 2)});
  CHECK(csv.rfind("k,D_k,d_k,witness\n1,2,1,", 0) == 0);
}

TEST_CASE("filtered suite runs and is deterministic") {
  VerifyConfig c;
  c.groups = {"Z2", "Z3"};
  auto a = verify_all(c);
  auto b = verify_all(c);
  CHECK(a.checks.size() == check_names().size());
  CHECK_FALSE(a.any_failed());
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(a.to_json(true).contains("timings"));
  CHECK_FALSE(a.to_json(false).contains("timings"));
}

TEST_CASE("injected fault is caught") {
  VerifyConfig c;
  c.groups = {"Z2", "Z3"};
  c.inject_fault = "generalized-constants";
  auto r = verify_all(c);
  CHECK(r.any_failed());
  for (const auto& ch : r.checks) {
    if (ch.name == "generalized-constants") CHECK(ch.status == CheckStatus::Fail);
    else CHECK(ch.status != CheckStatus::Fail);
  }
}

}
