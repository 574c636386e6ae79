#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mhs/cli.hpp"

using namespace mhs;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "mhs");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parsing") {
    CHECK(parse_complex("0.3,-0.2") == cplx(0.3, -0.2));
    CHECK(parse_complex("-2") == cplx(-2.0, 0.0));
    CHECK_THROWS_AS(parse_complex("0.3;1"), UsageError);
    CHECK_THROWS_AS(parse_complex("x"), UsageError);
    CHECK(parse_ints("1,2,3") == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(parse_ints("1,a"), UsageError);
}

TEST_CASE("eval and census") {
    auto r = run({"eval", "--li", "1,2", "--point", "1,0", "1,0"});
    REQUIRE(r.code == kOk);
    auto j = json::parse(r.out);
    CHECK(j[0].get<double>() == doctest::Approx(1.2020569031595942).epsilon(1e-10));
    CHECK(std::abs(j[1].get<double>()) < 1e-12);
    r = run({"census", "--m", "2,1"});
    CHECK(r.code == kOk);
    CHECK(json::parse(r.out)["c"] == json::array({1, 2, 2, 1}));
    r = run({"census", "--m", "1,2"});
    CHECK(json::parse(r.out)["d"] == json::array({1, 2, 2, 1}));
    r = run({"census", "--m", "1,2", "--csv"});
    CHECK(r.out.rfind("k,c,d\n0,1,1\n", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kUsage);
    CHECK(run({"census", "--m", "2,1", "--frob"}).code == kUsage);
    CHECK(run({"nope"}).code == kUsage);
    CHECK(run({"eval", "--li", "1,2", "--point", "1,0"}).code == kUsage);
    CHECK(run({"sv", "--fn", "L11", "--point", "0.5", "1"}).code == kDomain);
    CHECK(run({"sv", "--fn", "L9", "--point", "0.5"}).code == kUsage);
    CHECK(run({"verify", "--suite", "sv", "--grid", "50", "--tol", "1e-9"}).code == kOk);
    CHECK(run({"verify", "--suite", "sv", "--grid", "20", "--tol", "1e-30"}).code == kVerifyFailed);
    CHECK(run({"monodromy", "--n", "2", "--loop", "1,1"}).code == kOk);
}

TEST_CASE("determinism") {
    const std::vector<std::string> a{"verify", "--suite", "sv", "--grid", "30", "--seed", "3", "--json"};
    CHECK(run(a).out == run(a).out);
    auto b = run({"verify", "--suite", "sv", "--grid", "30", "--seed", "4"});
    CHECK(run(a).out != b.out);
}

TEST_CASE("subcommands") {
    auto r = run({"matrix", "--n", "2", "--point", "0.3,0.1", "0.4,-0.2"});
    REQUIRE(r.code == kOk);
    auto j = json::parse(r.out);
    CHECK(j["labels"] == json::array({"00", "01", "10", "11"}));
    CHECK(j["tau"] == json::array({0, 1, 1, 2}));
    r = run({"matrix", "--n", "2", "--point", "0.3,0.1", "0.4,-0.2", "--csv"});
    CHECK(r.out.rfind("row,col,re,im\n00,00,1,0\n", 0) == 0);
    r = run({"matrix", "--kind", "2,1", "--point", "0.3,0.1", "0.4,-0.2"});
    CHECK(json::parse(r.out)["tau"].size() == 6);
    r = run({"omega", "--n", "2"});
    CHECK(json::parse(r.out)["entries"].size() == 4);
    r = run({"monodromy", "--n", "2", "--point", "0.228,-0.343", "0.455,-0.166"});
    REQUIRE(r.code == kOk);
    for (const auto& e : json::parse(r.out)) CHECK(e["match"].get<bool>());
    r = run({"sv", "--fn", "L2", "--point", "0,1"});
    CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(0.91596559417).epsilon(1e-10));
    r = run({"sv", "--fn", "matrix", "--n", "2", "--point", "0.3,0.1", "0.4,-0.2"});
    auto s = run({"sv", "--fn", "L11", "--point", "0.3,0.1", "0.4,-0.2"});
    CHECK(json::parse(r.out)["value"].get<double>() ==
          doctest::Approx(json::parse(s.out)["value"].get<double>()).epsilon(1e-9));
    r = run({"limit", "--case", "2.i", "--point", "0.4,0.2"});
    REQUIRE(r.code == kOk);
    CHECK(json::parse(r.out)["max_diff"].get<double>() < 1e-4);
    r = run({"limit", "--n", "2", "--point", "0.5", "0.4", "--divisor", "1,0", "--tangent", "1"});
    REQUIRE(r.code == kOk);
    CHECK(json::parse(r.out)["generator_log"].get<bool>());
    CHECK(run({"limit", "--case", "2.i"}).code == kUsage);
}
