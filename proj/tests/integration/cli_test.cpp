#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "detloci/cli/cli.hpp"
#include "detloci/suite/runner.hpp"

#include <doctest.h>
#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using detloci::cli::kExitFailure;
using detloci::cli::kExitOk;
using detloci::cli::kExitUsage;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = detloci::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("detloci_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) out.push_back(l);
    return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("example table as CSV") {
    const Result r = run({"chern", "examples", "--which", "1", "--n-min", "2", "--n-max", "5"});
    CHECK(r.code == kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].rfind("n,case,vol_lead,n1_lead", 0) == 0);
    CHECK(rows[2].find("-20/3") != std::string::npos);
}

TEST_CASE("example table as JSON") {
    const Result r = run({"--format", "json", "chern", "examples", "--which", "2", "--n-min", "3", "--n-max", "3"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out).is_array());
}

TEST_CASE("property suite report") {
    const Result r = run({"--no-timestamp", "--trials", "100", "--seed", "7", "angles", "--suite", "sub_add"});
    CHECK(r.code == kExitOk);
    const json j = json::parse(r.out);
    CHECK(j.at("suite") == "sub_add");
    CHECK(j.at("trials") == 100);
    CHECK(j.at("failures") == 0);
    CHECK(j.at("first_counterexample").is_null());
}

TEST_CASE("reports are byte-identical across reruns and sharding") {
    const std::vector<std::string> base{"--no-timestamp", "--trials", "300", "--seed", "0x2a", "angles", "--suite", "all"};
    const Result a = run(base);
    const Result b = run(base);
    auto sharded = base;
    sharded.insert(sharded.begin(), {"--jobs", "4"});
    const Result c = run(sharded);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("missing and malformed input exit with 2") {
    Scratch s;
    const Result missing = run({"chern", "solve", "--input", s.path("missing.json")});
    CHECK(missing.code == kExitUsage);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    const std::string bad = s.write("bad.json", "{\n  \"n\": 3,\n  \"r\": 1,,\n}\n");
    const Result malformed = run({"chern", "solve", "--input", bad});
    CHECK(malformed.code == kExitUsage);
    CHECK(malformed.err.find("bad.json:3:") != std::string::npos);

    CHECK(run({}).code == kExitUsage);
    CHECK(run({"angles", "--suite", "no_such_suite"}).code == kExitUsage);
    CHECK(run({"--format", "xml", "angles", "--list"}).code == kExitUsage);
}

TEST_CASE("solve accepts both problem layouts") {
    Scratch s;
    const std::string nested = s.write("p1.json", R"({"n": 3, "r": 1, "e": {"rank": 2}, "f": {"rank": 3}})");
    const std::string flat = s.write("p2.json", R"({"n": 3, "r_e": 2, "r_f": 3, "r": 1, "cE": [], "cF": ["1"]})");
    const Result a = run({"chern", "solve", "--input", nested});
    const Result b = run({"chern", "solve", "--input", flat});
    REQUIRE(a.code == kExitOk);
    REQUIRE(b.code == kExitOk);
    CHECK(json::parse(a.out).at("determinantal") == json::parse(b.out).at("determinantal"));
    CHECK(json::parse(a.out).at("determinantal").at("quotients").at("n1/vol") == "-20/3");

    const std::string wrong = s.write("p3.json", R"({"n": 1, "r": 1, "e": {"rank": 2}, "f": {"rank": 3}})");
    CHECK(run({"chern", "solve", "--input", wrong}).code == kExitUsage);
    const std::string c0 = s.write("p4.json", R"({"n": 3, "r": 1, "e": {"rank": 2, "chern": ["2"]}, "f": {"rank": 3}})");
    CHECK(run({"chern", "solve", "--input", c0}).code == kExitUsage);
}

TEST_CASE("grassmann actions") {
    Scratch s;
    const std::string m = s.write("m.json", R"({"rows": 2, "cols": 4, "entries": [1, 0, 1, 0, 0, 1, 0, 1]})");
    const Result p = run({"grassmann", "pluecker", "--input", m, "--rational"});
    REQUIRE(p.code == kExitOk);
    const json j = json::parse(p.out);
    CHECK(j.at("relations_vanish") == true);
    std::vector<std::string> re;
    for (const auto& c : j.at("coords")) re.push_back(c[0]);
    CHECK(re == std::vector<std::string>{"1", "0", "1", "-1", "0", "1"});

    const std::string chart = s.write("c.json", R"({"rows": 2, "cols": 3, "entries": [2, 0, 4, 0, 1, 5]})");
    const Result c = run({"grassmann", "chart", "--input", chart});
    REQUIRE(c.code == kExitOk);
    const json z = json::parse(c.out).at("chart").at("entries");
    CHECK(z[0][0].get<double>() == doctest::Approx(2.0));
    CHECK(z[1][0].get<double>() == doctest::Approx(5.0));

    const std::string outside = s.write("o.json", R"({"rows": 2, "cols": 4, "entries": [0, 0, 1, 0, 0, 0, 0, 1]})");
    CHECK(run({"grassmann", "chart", "--input", outside}).code == kExitUsage);

    const std::string sq = s.write("sq.json", R"({"rows": 2, "cols": 2, "entries": [1, 2, 3, 4]})");
    const Result comp = run({"grassmann", "compound", "--input", sq, "--order", "2", "--rational"});
    REQUIRE(comp.code == kExitOk);
    CHECK(json::parse(comp.out).at("compound").at("entries")[0][0] == "-2");
    CHECK(run({"grassmann", "compound", "--input", sq, "--order", "3"}).code == kExitUsage);

    const std::string d = s.write("d.json", R"({"p": {"rows": 2, "cols": 4, "entries": [1, 0, 0, 0, 0, 1, 0, 0]},
                                               "q": {"rows": 2, "cols": 4, "entries": [0, 0, 1, 0, 0, 0, 0, 1]}})");
    const Result dist = run({"grassmann", "distance", "--input", d});
    REQUIRE(dist.code == kExitOk);
    CHECK(json::parse(dist.out).at("distance").get<double>() == doctest::Approx(1.5707963267948966));
}

TEST_CASE("angle pair report") {
    Scratch s;
    const std::string pair = s.write("pair.json", R"({"u": {"ambient_dim": 3, "basis": [[1, 0, 0], [0, 1, 0]]},
                                                     "v": {"ambient_dim": 3, "basis": [[1, 1, 0], [0, 0, 1]]}})");
    const Result r = run({"angles", "--input", pair});
    REQUIRE(r.code == kExitOk);
    const json j = json::parse(r.out);
    CHECK(j.at("intersection_dim") == 1);
    CHECK(j.at("transversal") == true);
    CHECK(j.at("min_angle").get<double>() == doctest::Approx(j.at("min_angle_dual").get<double>()));
}

TEST_CASE("injected failure, replay and tamper detection") {
    Scratch s;
    const std::string out = s.path("report.json");
    const Result r = run({"--no-timestamp", "--trials", "50", "--seed", "9", "--out", out, "angles", "--suite",
                          "triangle", "--inject-failure", "17"});
    CHECK(r.code == kExitFailure);
    std::ifstream in(out);
    const json report = json::parse(in);
    CHECK(report.at("failures") == 1);
    const json blob = report.at("first_counterexample");
    CHECK(blob.at("trial") == 17);
    CHECK(blob.at("schema") == "detloci.counterexample.v1");

    const std::string blob_path = s.write("blob.json", blob.dump());
    const Result replay = run({"--no-timestamp", "replay", "--blob", blob_path});
    CHECK(replay.code == kExitFailure);
    const json rj = json::parse(replay.out);
    CHECK(rj.at("reproduced") == true);
    CHECK(rj.at("counterexample").at("values") == blob.at("values"));

    json altered = blob;
    altered["seed"] = blob.at("seed").get<std::uint64_t>() + 1;
    CHECK(run({"replay", "--blob", s.write("altered.json", altered.dump())}).code == kExitUsage);

    json old = blob;
    old["schema"] = "detloci.counterexample.v0";
    CHECK(run({"replay", "--blob", s.write("old.json", old.dump())}).code == kExitUsage);

    // The same trial without the injection flag passes.
    json passing = blob;
    passing["injected"] = false;
    passing["passed"] = true;
    detloci::suite::Counterexample c;
    c.suite = passing.at("suite");
    c.seed = passing.at("seed");
    c.trial = passing.at("trial");
    c.tolerance = passing.at("tolerance");
    c.injected = false;
    passing["digest"] = detloci::suite::counterexample_digest(c);
    const Result ok = run({"--no-timestamp", "replay", "--blob", s.write("pass.json", passing.dump())});
    CHECK(ok.code == kExitOk);
    CHECK(json::parse(ok.out).at("failures") == 0);
}

TEST_CASE("suite listing") {
    const Result r = run({"grassmann", "--list"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("pluecker_relations") != std::string::npos);
}

}  // TEST_SUITE
