#include <catch2/catch_amalgamated.hpp>

#include "qpchar/verify.hpp"

using namespace qpchar;

TEST_CASE("compare reports the minimal mismatch index") {
  const auto same = compare(TruncatedSeries::one(3), TruncatedSeries::one(3), "ones");
  CHECK(same.ok());
  CHECK(same.order == 3);
  CHECK_FALSE(same.first_mismatch.has_value());

  TruncatedSeries a(std::vector<Integer>{1, 1});
  TruncatedSeries b(std::vector<Integer>{1, 2});
  const auto diff = compare(a, b, "pair");
  CHECK_FALSE(diff.ok());
  CHECK(diff.first_mismatch == 1);
  CHECK(diff.lhs == Integer(1));
  CHECK(diff.rhs == Integer(2));

  TruncatedSeries c(std::vector<Integer>{0, 5, 0, 7});
  TruncatedSeries d(std::vector<Integer>{0, 4, 0, 6});
  CHECK(compare(c, d, "min index").first_mismatch == 1);

  // match/mismatch status is symmetric in the arguments
  CHECK(compare(c, d, "cd").ok() == compare(d, c, "dc").ok());
  CHECK(compare(c, d, "cd").first_mismatch == compare(d, c, "dc").first_mismatch);
  CHECK(compare(a, a, "aa").ok() == compare(a, a, "aa").ok());

  CHECK_THROWS_AS(compare(TruncatedSeries::one(2), TruncatedSeries::one(3), "bad"),
                  std::invalid_argument);
}

TEST_CASE("compare on the Rogers-Ramanujan identity") {
  const GRRParams gp(2, 1, 2);
  CHECK(compare(grr_product(gp, 100), grr_sum(gp, 100), "rr").ok());
}

TEST_CASE("complement dimensions for (2,1)") {
  const HighestWeight w(2, 1);
  CHECK(complement_check(w, 40).ok());

  const auto verma = verma_char(40);
  const auto standard = standard_char_enumerated(w, 40);
  CHECK(verma.coefficient(0) - standard.coefficient(0) == 0); // highest weight vector survives
  CHECK(verma.coefficient(2) - standard.coefficient(2) == 1); // 4 - 3
  CHECK(verma.coefficient(3) - standard.coefficient(3) == 3); // 8 - 5

  CHECK(complement_check(HighestWeight(3, 2), 40).ok());
  CHECK(complement_check(HighestWeight(1, 3), 40).ok()); // nonnegativity only
}

TEST_CASE("closing Andrews identity") {
  const auto rep = andrews_closing_check(1, 100);
  CHECK(rep.ok());
  // l=1 is parts = +-1 mod 5 against sum q^{n^2}/(q)_n
  CHECK(partitions_with_parts_in({1, 4}, 5, 100) == grr_product(GRRParams(2, 1, 2), 100));
  CHECK(partitions_with_parts_in({1, 4}, 5, 100).coefficient(4) == 2);

  CHECK(andrews_closing_check(2, 60).ok());
  CHECK_THROWS_AS(andrews_closing_check(0, 10), std::invalid_argument);
}

TEST_CASE("run_suite configuration") {
  CHECK(run_suite(SuiteConfig{}).empty()); // empty selection

  SuiteConfig bad;
  bad.select = {"grr", "nonsense"};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);

  SuiteConfig negative;
  negative.select = {"grr"};
  negative.grr_order = -1;
  CHECK_THROWS_AS(run_suite(negative), std::invalid_argument);
}

TEST_CASE("run_suite at desk scale is all-match and deterministic") {
  SuiteConfig cfg;
  cfg.select = SuiteConfig::known_selectors();
  cfg.order = 30;
  cfg.grr_order = 50;
  cfg.section8_order = 50;
  cfg.max_level = 3;
  cfg.enum_exponent = 12;
  cfg.min_exp_budget = 16;
  cfg.jacobi_window = 4;
  cfg.pbw_order = 15;

  const auto reports = run_suite(cfg);
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    INFO(r.label);
    CHECK(r.ok());
  }

  const auto again = run_suite(cfg);
  REQUIRE(again.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].label == again[i].label);
    CHECK(reports[i].status == again[i].status);
  }
}

TEST_CASE("restricted suite points") {
  SuiteConfig cfg;
  cfg.select = {"grr"};
  cfg.grr_order = 80;
  cfg.grr_point = GRRParams(2, 1, 2);
  const auto reports = run_suite(cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].label == "grr(l=2,s=1,r=2) product == sum");
  CHECK(reports[0].ok());

  SuiteConfig cmod;
  cmod.select = {"module", "complement"};
  cmod.order = 40;
  cmod.weight_point = HighestWeight(2, 1);
  const auto mod_reports = run_suite(cmod);
  REQUIRE(mod_reports.size() == 5); // 2 module + complement + 2 dims
  for (const auto& r : mod_reports) {
    INFO(r.label);
    CHECK(r.ok());
  }
}
