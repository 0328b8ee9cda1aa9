#include <doctest.h>

#include <matchlab/report.hpp>

using namespace matchlab;

TEST_SUITE_BEGIN("report");

namespace {

Report sample_report() {
  Report r;
  r.suite = "demo";
  r.params = {{"r", "2"}};
  r.seed = 42;
  r.wall_seconds = 1.5;
  r.add("check-a", {{"h", "1"}}, "0", "0", true);
  r.add("check-b", {{"h", "2"}}, "1/2", "1/3", false);
  return r;
}

}  // namespace

TEST_CASE("pass aggregation") {
  Report r = sample_report();
  CHECK_FALSE(r.all_pass());
  r.checks.pop_back();
  CHECK(r.all_pass());
}

TEST_CASE("json rendering") {
  Report r = sample_report();
  std::string stable = to_json_string(r, false);
  CHECK(stable == to_json_string(r, false));
  CHECK(stable.find("timestamp") == std::string::npos);
  CHECK(stable.find("wall_seconds") == std::string::npos);
  CHECK(stable.find("\"suite\": \"demo\"") != std::string::npos);
  CHECK(stable.find("\"1/2\"") != std::string::npos);

  std::string timed = to_json_string(r, true);
  CHECK(timed.find("timestamp") != std::string::npos);
  CHECK(timed.find("wall_seconds") != std::string::npos);
}

TEST_CASE("csv rendering") {
  Report r = sample_report();
  r.checks[0].expected = "a,b";  // needs quoting
  std::string csv = to_csv_string(r);
  CHECK(csv.rfind("suite,check,params,expected,got,pass\n", 0) == 0);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find("demo,check-b,h=2,1/2,1/3,0") != std::string::npos);
}

TEST_SUITE_END();
