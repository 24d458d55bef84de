#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invol/verify.hpp"

using namespace invol;

namespace {

// elapsed_ms is wall-clock noise; every other field must be reproducible.
void check_same_modulo_time(const CheckReport& a, const CheckReport& b) {
  CHECK(a.identity == b.identity);
  CHECK(a.range == b.range);
  CHECK(a.points_checked == b.points_checked);
  CHECK(a.counterexamples == b.counterexamples);
  CHECK(a.n0 == b.n0);
  CHECK(a.notes == b.notes);
}

}  // namespace

TEST_CASE("formula-vs-enumeration sweep is clean") {
  const CheckReport r = check_thm3_bruteforce(8);
  CHECK(r.ok());
  CHECK(r.identity == "thm3-bruteforce");
  // n = 0 contributes 1 + 5 points, each 1 <= n <= 8 contributes n + 5.
  CHECK(r.points_checked == 82);
}

TEST_CASE("fiber sweep is clean") {
  const CheckReport r = check_prop1_fibers(5, 4);
  CHECK(r.ok());
  CHECK(r.identity == "prop1-fibers");
  CHECK(r.points_checked > 0);
}

TEST_CASE("census sweep is clean") {
  const CheckReport r = check_prop2_even_count(5, 4);
  CHECK(r.ok());
  CHECK(r.points_checked == 90);
}

TEST_CASE("convolution sweep is clean") {
  const CheckReport r = check_eq34_binomial(6, 6);
  CHECK(r.ok());
  CHECK(r.points_checked == 126);
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("n=0 excluded") != std::string::npos);
}

TEST_CASE("signed-count route sweep is clean") {
  const CheckReport r = check_ahat_routes(20, 20);
  CHECK(r.ok());
  CHECK(r.points_checked == 441);
}

TEST_CASE("convolution-identity residual sweep is clean") {
  const CheckReport r = check_worpitzky(8, 8);
  CHECK(r.ok());
  CHECK(r.points_checked == 64);
}

TEST_CASE("bivariate identity sweep is clean") {
  const CheckReport r = check_gf_identity(8, 8);
  CHECK(r.ok());
  CHECK(r.points_checked == 81);
}

TEST_CASE("recurrence sweep reports its threshold") {
  const CheckReport r = check_zeilberger(30);
  CHECK(r.ok());
  CHECK(r.points_checked == 602);
  REQUIRE(r.n0.has_value());
  CHECK(*r.n0 <= 4);
  CHECK(*r.n0 >= 3);
  REQUIRE(!r.notes.empty());
  CHECK(r.notes.back().find("n0=") != std::string::npos);
}

TEST_CASE("four-route sweep is clean") {
  const CheckReport r = check_f1_fourway(50, 20);
  CHECK(r.ok());
  CHECK(r.points_checked == 176);
}

TEST_CASE("sharded sweeps agree with serial") {
  check_same_modulo_time(check_thm3_bruteforce(7, 3), check_thm3_bruteforce(7));
  check_same_modulo_time(check_prop1_fibers(5, 4, 3), check_prop1_fibers(5, 4));
  check_same_modulo_time(check_prop2_even_count(5, 4, 3), check_prop2_even_count(5, 4));
  check_same_modulo_time(check_eq34_binomial(6, 6, 3), check_eq34_binomial(6, 6));
  check_same_modulo_time(check_ahat_routes(20, 20, 3), check_ahat_routes(20, 20));
  check_same_modulo_time(check_worpitzky(8, 8, 3), check_worpitzky(8, 8));
  check_same_modulo_time(check_gf_identity(8, 8, 3), check_gf_identity(8, 8));
  check_same_modulo_time(check_zeilberger(30, 3), check_zeilberger(30));
  check_same_modulo_time(check_f1_fourway(50, 20, 3), check_f1_fourway(50, 20));
}

TEST_CASE("full default battery is clean") {
  const std::vector<CheckReport> reports = check_all();
  REQUIRE(reports.size() == 9);
  for (const CheckReport& r : reports) {
    INFO(r.identity);
    CHECK(r.ok());
    CHECK(r.points_checked > 0);
  }
  CHECK(reports[0].identity == "prop1-fibers");
  CHECK(reports[6].identity == "zeilberger");
  REQUIRE(reports[6].n0.has_value());
  CHECK(*reports[6].n0 <= 4);
}
