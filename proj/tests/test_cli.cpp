#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "wsg/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> more) {
  base.insert(base.end(), more);
  return base;
}

const std::vector<std::string> kY231{"--family", "Y", "--q", "2", "--n", "3", "--s", "1"};
const std::vector<std::string> kX21131{"--family", "X", "--p", "2", "--a", "1", "--b", "1", "--n", "3", "--s", "1"};

std::vector<std::string> cmd(const std::string& name, const std::vector<std::string>& curve,
                             std::initializer_list<std::string> more = {}) {
  std::vector<std::string> args{name};
  args.insert(args.end(), curve.begin(), curve.end());
  args.insert(args.end(), more);
  return args;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("params") {
  auto r = run(cmd("params", kY231));
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "params");
  CHECK(j["derived"]["genus"] == 10);
  CHECK(j["derived"]["generators"] == nlohmann::json::array({6, 8, 9}));

  r = run({"params", "--family", "X", "--p", "2", "--a", "1", "--b", "1", "--n", "3", "--s", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("GenusNotPositive") != std::string::npos);

  r = run({"params", "--family", "Y", "--q", "2", "--n", "3", "--s", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SNotDividing") != std::string::npos);

  r = run(cmd("params", kY231, {"--format", "tsv"}));
  CHECK(r.out.find("genus\t10\n") != std::string::npos);
}

TEST_CASE("flag errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"params", "--family", "Z", "--q", "2", "--n", "3", "--s", "1"}).code == 2);
  CHECK(run(cmd("gamma", kY231)).code == 2);  // --m missing
  CHECK(run(cmd("gamma", kY231, {"--m", "3"})).code == 2);
  CHECK(run(cmd("member", kY231, {"--m", "1", "--vector", "1,x"})).code == 2);
  CHECK(run(cmd("member", kY231, {"--m", "1", "--vector", "1,1,1"})).code == 2);
  CHECK(run(cmd("gaps", kY231, {"--m", "1", "--box-sum", "5"})).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("vector listings") {
  auto r = run(cmd("gaps", kX21131, {"--m", "1", "--format", "tsv"}));
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == 13);
  CHECK(r.out.rfind("0\t1\n", 0) == 0);

  r = run(cmd("gamma", kY231, {"--m", "1"}));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["payload"]["count"] == 9);
  CHECK(j["payload"]["vectors"][0] == nlohmann::json::array({-3, 6}));

  r = run(cmd("lambda", kY231, {"--m", "1", "--classical", "--format", "tsv"}));
  CHECK(lines(r.out) == 11);

  r = run(cmd("gaps", kY231, {"--m", "1", "--pure", "--format", "tsv"}));
  CHECK(r.out.find("1\t1\n") != std::string::npos);
}

TEST_CASE("member") {
  auto r = run(cmd("member", kY231, {"--m", "1", "--vector", "1,1"}));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["payload"]["member"] == false);
  CHECK(j["payload"]["failing_coordinate"] == 1);

  r = run(cmd("member", kY231, {"--m", "1", "--vector", "0,9"}));
  j = nlohmann::json::parse(r.out);
  CHECK(j["payload"]["member"] == true);
  CHECK(j["payload"]["witnesses"][1]["kind"] == "translation");
  CHECK(j["payload"]["witnesses"][1]["vector"] == nlohmann::json::array({-9, 9}));

  r = run(cmd("member", kY231, {"--m", "1", "--vector", "-9,9", "--classical"}));
  j = nlohmann::json::parse(r.out);
  CHECK(j["payload"]["member"] == false);
  CHECK(j["payload"]["generalized_member"] == true);
}

TEST_CASE("round trip through member") {
  for (const auto& [listing, expected] : std::vector<std::pair<std::string, bool>>{{"gaps", false}, {"gamma", true}}) {
    const auto r = run(cmd(listing, kY231, {"--m", "2", "--format", "tsv"}));
    REQUIRE(r.code == 0);
    std::istringstream rows(r.out);
    std::string row;
    while (std::getline(rows, row)) {
      std::replace(row.begin(), row.end(), '\t', ',');
      const auto m = run(cmd("member", kY231, {"--m", "2", "--vector", row}));
      REQUIRE(m.code == 0);
      REQUIRE(nlohmann::json::parse(m.out)["payload"]["generalized_member"] == expected);
    }
  }
}

TEST_CASE("counts and verify") {
  auto r = run(cmd("counts", kY231, {"--m", "1"}));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["payload"]["gap_count"] == 115);
  CHECK(j["payload"]["two_point_gap_count"] == 115);
  CHECK(j["payload"]["relative_maximals_formula"] == 11);
  CHECK(j["payload"]["gap_count_upper_bound"] == 150);

  r = run(cmd("verify", kY231, {"--m", "1"}));
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["payload"]["passed"] == true);

  r = run(cmd("verify", kX21131, {"--m", "1", "--jobs", "2", "--format", "tsv"}));
  CHECK(r.code == 0);
  CHECK(r.out.find("passed\ttrue\n") != std::string::npos);
}

TEST_CASE("output is stable across runs") {
  const auto args = cmd("gaps", kY231, {"--m", "2", "--jobs", "3"});
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).out == run(cmd("gaps", kY231, {"--m", "2"})).out);
}

TEST_CASE("large parameters stay exact") {
  const auto r = run({"params", "--family", "Y", "--q", "512", "--n", "3", "--s", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  // (q^5 - q^3 - q^3 + q^2) / 2
  CHECK(j["derived"]["genus"] == (35184372088832LL - 2 * 134217728LL + 262144LL) / 2);
  CHECK(run({"params", "--family", "Y", "--q", "1024", "--n", "9", "--s", "1"}).code == 2);
}
