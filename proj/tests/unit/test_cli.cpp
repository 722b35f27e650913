#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "turanc/cli.hpp"
#include "turanc/error.hpp"

using namespace turanc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "turanc");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json report(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const Result r = run(std::move(args));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    j.erase("timing");
    return j;
}

}  // namespace

TEST_CASE("params") {
    const auto j = report({"params", "D(2,2)"});
    CHECK(j["schema"] == "turanc.run/1");
    CHECK(j["command"] == "params");
    CHECK(j["outputs"]["m"] == 3);
    CHECK(j["outputs"]["m2"] == 4);
    CHECK(j["outputs"]["bipartition"] == nlohmann::json::array({3, 3}));
    CHECK(j["ok"] == true);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({"params", "S(1)"}).code == 2);
    CHECK(run({"params", "S(1)"}).err.find("position") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"exc", "P5"}).code == 2);
    CHECK(run({"exc", "P5", "11"}).code == 2);
    CHECK(run({"--workers", "0", "exc", "P5", "6"}).code == 2);
    CHECK(run({"check", "--host", "g6:A", "P3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct") {
    const auto j = report({"construct", "cycle_of_cliques", "--n", "12", "--block", "4"});
    CHECK(j["outputs"]["actual_edges"] == 21);
    CHECK(j["outputs"]["claimed_edges"] == 21);
    CHECK(j["outputs"]["connected"] == true);
    const auto k = report({"construct", "prop2_delta2", "--n", "13", "--tree", "D(2,3)"});
    CHECK(k["outputs"]["tree_free"] == true);
}

TEST_CASE("check with every host syntax") {
    CHECK(report({"check", "--host", "k2_n2:8", "D(2,2)"})["outputs"]["contains"] == false);
    const auto yes = report({"check", "--host", "g6:C~", "P4"});
    CHECK(yes["outputs"]["contains"] == true);
    CHECK(yes["outputs"]["witness"].size() == 4);
    CHECK(report({"check", "--host", "adj:3:6,5,3", "P3"})["outputs"]["contains"] == true);
    const auto path = std::filesystem::temp_directory_path() / "turanc_host_test.g6";
    std::ofstream(path) << "\n  Bg\n";
    CHECK(report({"check", "--host", "@" + path.string(), "P3"})["outputs"]["contains"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("exc writes extremal graphs") {
    const auto path = std::filesystem::temp_directory_path() / "turanc_extremal_test.g6";
    const auto j = report({"exc", "S(3,2,1)", "7", "--extremal-out", path.string()});
    CHECK(j["outputs"]["max_edges"] == 12);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) lines += !line.empty();
    CHECK(lines == j["outputs"]["extremal_count"].get<int>());
    std::filesystem::remove(path);
}

TEST_CASE("bounds, scan and gamma") {
    const auto b = report({"bounds", "D(2,2)", "9"});
    CHECK(b["outputs"]["oracle"] == 14);
    CHECK(b["outputs"]["best_lower_bound"] == 14);
    CHECK(b["ok"] == true);
    CHECK(report({"bounds", "D(2,2)", "20", "--no-oracle"})["outputs"]["oracle"].is_null());
    const auto s = report({"scan", "S(3,2,1)", "--n-max", "8"});
    CHECK(s["outputs"]["monotone"] == false);
    const auto g = report({"gamma", "S5", "--n-min", "6", "--n-max", "7"});
    CHECK(g["outputs"]["points"].size() == 2);
}

TEST_CASE("verify-tables reports failures through the exit code") {
    const auto path = std::filesystem::temp_directory_path() / "turanc_manifest_test.json";
    std::ofstream(path) << R"js({"schema":"turanc.tables/1","rows":[
        {"group":"g","tree":"P4","formula":"n-1","n_min":4,"kind":"exact"}]})js";
    CHECK(run({"verify-tables", "--n-max", "7", "--manifest", path.string()}).code == 0);
    std::ofstream(path) << R"js({"schema":"turanc.tables/1","rows":[
        {"group":"g","tree":"P4","formula":"n","n_min":4,"kind":"exact"}]})js";
    CHECK(run({"verify-tables", "--n-max", "7", "--manifest", path.string()}).code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("output is deterministic apart from timing") {
    const std::vector<std::string> cmd{"exc", "SD22", "8"};
    auto one = cmd;
    one.insert(one.begin(), {"--workers", "1"});
    auto four = cmd;
    four.insert(four.begin(), {"--workers", "4"});
    CHECK(report(one) == report(four));
    CHECK(run({"exc", "SD22", "8"}).out == run({"exc", "SD22", "8"}).out);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "turanc_out_test.txt";
    const Result r = run({"--out", path.string(), "params", "P5"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("ell: 5") != std::string::npos);
    std::filesystem::remove(path);
}
