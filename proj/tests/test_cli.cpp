#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "affkl/cli.hpp"
#include "affkl/serialize.hpp"

using namespace affkl;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "affkl");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream os;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), os);
    return {code, os.str()};
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(AFFKL_FIXTURES) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// exponent -> coefficient, ignoring provenance
std::map<std::string, Int> table(const Json& j) {
    std::map<std::string, Int> out;
    for (const auto& t : j.at("terms"))
        out[t.at("exponent").dump()] = t.at("coeff").get<Int>();
    return out;
}

} // namespace

TEST_CASE("golden files") {
    struct Golden {
        const char* file;
        std::vector<std::string> args;
    };
    const std::vector<Golden> cases = {
        {"d4-roots.json", {"roots", "--type", "D4"}},
        {"d4-ex-1.json", {"char", "--route", "kw", "--type", "D4", "--lambda", "-1,0,0,0,0", "--i", "0", "--radius", "2"}},
        {"d4-ex-2.json", {"char", "--route", "kw", "--type", "D4", "--lambda", "0,1,-1,0,0", "--i", "2", "--radius", "2"}},
        {"a2-corollary-i1.json", {"char", "--route", "closed", "--type", "A2", "--lambda", "0,-1,0", "--i", "1", "--radius", "4"}},
        {"a2-subreg-mult.json", {"subreg-mult", "--type", "A2", "--gamma", "2,-1"}},
        {"a3-klpoly-3412.json", {"klpoly", "--type", "A3", "--w", "2,1,3,2", "--v", ""}},
    };
    for (const auto& g : cases) {
        CAPTURE(g.file);
        const Run r = run(g.args);
        CHECK(r.code == exit_ok);
        CHECK(r.out == fixture(g.file));
    }
}

TEST_CASE("golden character tables agree across routes") {
    const Json kw = Json::parse(fixture("d4-ex-1.json"));
    const auto expected = table(kw);
    CHECK(expected.size() == kw.at("nonzero").get<std::size_t>());
    for (const char* route : {"closed", "kl"}) {
        CAPTURE(route);
        const Run r = run({"char", "--route", route, "--type", "D4", "--lambda", "-1,0,0,0,0", "--i", "0", "--radius", "2"});
        REQUIRE(r.code == exit_ok);
        const Json j = Json::parse(r.out);
        CHECK(j.at("incomplete").get<Int>() == 0);
        CHECK(table(j) == expected);
    }
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"char", "--type", "A3", "--lambda", "-1,0,0,0", "--i", "0", "--radius", "3",
                                        "--route", "kl", "--format", "csv"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
    CHECK(a.out.find("coeff") != std::string::npos);
    auto threads = args;
    threads.insert(threads.end(), {"--threads", "4"});
    CHECK(run(threads).out == a.out);
}

TEST_CASE("exit codes and error reports") {
    Run r = run({"roots", "--type", "D4", "--bogus"});
    CHECK(r.code == exit_usage);
    CHECK(Json::parse(r.out).at("error") == "invalid_argument");

    r = run({"roots", "--type", "G2"});
    CHECK(r.code == exit_usage);
    CHECK(Json::parse(r.out).at("error") == "unsupported_type");

    r = run({"klpoly", "--type", "A2", "--w", "0,1,2,0,1,2", "--v", "", "--cap", "3"});
    CHECK(r.code == exit_cap);
    CHECK(Json::parse(r.out).at("error") == "cap_exceeded");

    r = run({"char", "--type", "D4", "--lambda", "-1,0,0,0,0", "--i", "2"});
    CHECK(r.code == exit_usage);
    CHECK(Json::parse(r.out).at("error") == "invalid_pair");

    r = run({"subreg-mult", "--type", "D4", "--gamma", "1,0"});
    CHECK(r.code == exit_usage);
    CHECK(Json::parse(r.out).at("error") == "not_a_coroot");

    CHECK(run({"roots", "--type", "D4", "--cap", "0"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
    CHECK(run({"roots", "--help"}).code == exit_ok);
}

TEST_CASE("verification subcommands") {
    Run r = run({"subreg-verify", "--type", "D4", "--cap", "8"});
    CHECK(r.code == exit_ok);
    CHECK(Json::parse(r.out).at("pass") == true);
    r = run({"char-verify", "--examples", "a-corollary", "--radius", "6"});
    CHECK(r.code == exit_ok);
    r = run({"char-verify", "--examples", "d4-items-5-7", "--radius", "2"});
    CHECK(r.code == exit_ok);
    r = run({"selftest", "--quick"});
    CHECK(r.code == exit_ok);
}

TEST_CASE("weyl subcommand") {
    Json j = Json::parse(run({"weyl", "--type", "D4", "--word", "2,0"}).out);
    CHECK(j.at("length") == 2);
    j = Json::parse(run({"weyl", "--type", "A2", "--enumerate", "2"}).out);
    CHECK(j.at("total") == 10);
    j = Json::parse(run({"weyl", "--type", "A3", "--perm", "0,2,3,5"}).out);
    CHECK(j.at("length") == 1);
}
