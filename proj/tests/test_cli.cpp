#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "qfree_cli/cli.hpp"

using qfree::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json invoke_json(std::vector<std::string> args)
{
    args.push_back("--json");
    auto r = invoke(args);
    REQUIRE(r.code == 0);
    return nlohmann::ordered_json::parse(r.out);
}

}  // namespace

TEST_CASE("rho examples")
{
    auto j = invoke_json({"rho", "--a", "2,3"});
    CHECK(j["result"] == "7/12");
    CHECK(j.contains("params"));
    CHECK(j.contains("provenance"));

    auto r = invoke({"rho", "--a", "2,4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not pairwise coprime") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("max-subset example")
{
    auto j = invoke_json({"max-subset", "--p", "2", "--q", "3", "--n", "12", "--witness"});
    CHECK(j["result"]["count"] == 7);
    CHECK(j["result"]["witness"] == nlohmann::ordered_json({1, 4, 5, 6, 7, 9, 11}));
    auto r = invoke({"max-subset", "--p", "2", "--q", "3", "--n", "12", "--witness"});
    CHECK(r.out == "7\n[1,4,5,6,7,9,11]\n");
}

TEST_CASE("subcommand results")
{
    CHECK(invoke_json({"rho-general", "--a", "2,3", "--depth", "6"})["result"]["contains_closed_form"] == true);
    CHECK(invoke_json({"f", "--p", "2", "--q", "3", "--t", "8"})["result"]["f"] == 4);
    CHECK(invoke_json({"gamma", "--b", "2", "--depth", "0"})["result"]["lower"] == "1/1");
    auto e = invoke_json({"enumerate", "--b", "2,3", "--bound", "12"});
    CHECK(e["result"].size() == 8);
    CHECK(e["result"][7]["value"] == 12);
    auto m = invoke_json({"monochromatize", "--p", "2", "--q", "3", "--n", "3", "--points", "[[1,0],[0,1]]"});
    CHECK(m["result"]["color"] == "black");
    auto s = invoke_json({"simplex", "--alphas", "1,2", "--c", "4"});
    CHECK(s["result"]["white"] == 5);
    CHECK(s["result"]["black"] == 4);
    auto b = invoke_json({"black-majority", "--alphas", "1,sqrt(2)"});
    CHECK(b["result"]["c"] == "3/2");
    b = invoke_json({"black-majority", "--alphas", "ln(2),ln(3)"});
    CHECK(b["result"]["n"] == 3);
    b = invoke_json({"black-majority", "--alphas", "1,2"});
    CHECK(b["result"]["found"] == false);
    auto g = invoke_json({"gap", "--p", "2", "--q", "3"});
    CHECK(g["result"]["gap_proven"] == true);
    CHECK(g["result"]["rho"] == "7/12");
    auto d = invoke_json({"dense-set", "--a", "2,3", "--x", "12"});
    CHECK(d["result"]["members"] == nlohmann::ordered_json({1, 4, 5, 6, 7, 9, 11}));
    CHECK(d["result"]["counting_density"] == "7/12");
}

TEST_CASE("csv tables")
{
    auto r = invoke({"slope-profile", "--alpha1", "1", "--alpha2", "2", "--c-max", "4", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "c,white,black,diff\n1,1,1,0\n2,2,2,0\n3,3,3,0\n4,5,4,1\n");
    r = invoke({"densities", "--a", "2", "--checkpoints", "12", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("X,count,count_density,count_density_decimal,log_density\n12,8,2/3,0.666666666667,", 0) == 0);
    r = invoke({"rho", "--a", "2,3", "--csv"});
    CHECK(r.code == 1);
}

TEST_CASE("exit codes for malformed inputs")
{
    const std::vector<std::pair<std::vector<std::string>, int>> cases{
        {{}, 1},
        {{"frobnicate"}, 1},
        {{"rho"}, 1},
        {{"rho", "--a", "2,3", "--bogus"}, 1},
        {{"rho", "--a", "2,3", "--json", "--csv"}, 1},
        {{"max-subset", "--p", "two", "--q", "3", "--n", "5"}, 1},
        {{"max-subset", "--p", "2", "--q", "3", "--n", "-5"}, 1},
        {{"verify", "--suite", "nonsense"}, 1},
        {{"sigma", "--p", "2", "--q", "3", "--budget", "huge"}, 1},
        {{"rho", "--a", "2,3", "--budget", "huge"}, 1},
        {{"rho", "--a", "2,4"}, 2},
        {{"rho", "--a", "1,2"}, 2},
        {{"rho", "--a", "2,x"}, 2},
        {{"rho", "--a", "3/2"}, 2},
        {{"rho-general", "--a", "2,2"}, 2},
        {{"max-subset", "--p", "2", "--q", "4", "--n", "5"}, 2},
        {{"max-subset", "--p", "2", "--q", "3", "--n", "0"}, 2},
        {{"sigma", "--p", "2", "--q", "3", "--tol", "0"}, 2},
        {{"monochromatize", "--p", "2", "--q", "3", "--n", "12", "--points", "[[0,0],[1,0]]"}, 2},
        {{"monochromatize", "--p", "2", "--q", "3", "--n", "12", "--points", "not json"}, 2},
        {{"simplex", "--alphas", "1,sqrt(-2)", "--c", "3"}, 2},
        {{"sigma", "--p", "2", "--q", "3", "--tol", "1/1000000000000", "--limit", "100"}, 3},
        {{"rho-general", "--a", "2,3,6", "--depth", "12", "--cap", "10"}, 3},
    };
    for (const auto& [args, expected] : cases) {
        auto r = invoke(args);
        std::string joined;
        for (const auto& a : args) {
            joined += a + " ";
        }
        CAPTURE(joined);
        CHECK(r.code == expected);
        if (expected != 0) {
            CHECK_FALSE(r.err.empty());
        }
    }
}

TEST_CASE("json output round-trips")
{
    const std::vector<std::vector<std::string>> commands{
        {"rho", "--a", "2,3,5"},
        {"rho-general", "--a", "3/2", "--depth", "6"},
        {"sigma", "--p", "2", "--q", "5", "--tol", "1/1000"},
        {"max-subset", "--p", "3", "--q", "4", "--n", "40", "--witness"},
        {"densities", "--a", "2,3", "--x", "1000"},
        {"gamma", "--a", "4/9,6", "--depth", "4", "--witness"},
        {"slope-profile", "--c-max", "12"},
        {"verify", "--suite", "geometry", "--budget", "small"},
    };
    for (auto args : commands) {
        args.push_back("--json");
        auto r = invoke(args);
        REQUIRE(r.code == 0);
        auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("identical argv gives identical output")
{
    std::vector<std::string> args{"verify", "--suite", "theorem6", "--seed", "7", "--budget", "small"};
    auto a = invoke(args);
    auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = invoke({"verify", "--suite", "monochromatize", "--seed", "7", "--budget", "small", "--json"});
    auto d = invoke({"verify", "--suite", "monochromatize", "--seed", "7", "--budget", "small", "--json"});
    CHECK(c.out == d.out);
}

TEST_CASE("help exits cleanly")
{
    auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max-subset") != std::string::npos);

    auto sub = invoke({"f", "--help"});
    CHECK(sub.code == 0);
    auto first = sub.out.find("Usage:");
    REQUIRE(first != std::string::npos);
    CHECK(sub.out.find("Usage:", first + 1) == std::string::npos);
}
