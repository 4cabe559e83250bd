#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "frobkit/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = frobkit::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report prints the full invariant set") {
    CliRun r = run({"report", "4", "7", "11", "--list"});
    REQUIRE(r.code == 0);
    json obj = json::parse(r.out);
    CHECK(obj["generators"] == json::array({4, 7, 11}));
    CHECK(obj["family"] == "generic");
    CHECK(obj["g"] == 17);
    CHECK(obj["n"] == 9);
    CHECK(obj["s"] == 66);
    CHECK(obj["gaps"] == json::array({1, 2, 3, 5, 6, 9, 10, 13, 17}));
}

TEST_CASE("ap --sum prints the bare value") {
    CliRun r = run({"ap", "--a", "7", "--d", "2", "--k", "3", "--sum"});
    CHECK(r.code == 0);
    CHECK(r.out == "165\n");
}

TEST_CASE("ap emits the family parameters and all three invariants") {
    CliRun r = run({"ap", "--a", "6", "--d", "5", "--k", "4", "--lambda", "i"});
    REQUIRE(r.code == 0);
    json obj = json::parse(r.out);
    CHECK(obj["family"] == "ap");
    CHECK(obj["generators"] == json::array({6, 11, 16, 21}));
    CHECK(obj["params"]["q"] == 1);
    CHECK(obj["params"]["r"] == 2);
    CHECK(obj["g"] == 31);
    CHECK(obj["n"] == 17);
    CHECK(obj["s"] == 212);
    CHECK(obj["lambda"] == "0+1i");
    CHECK(obj["weighted"]["re"] == "-20");
    CHECK(obj["weighted"]["im"] == "-22");
}

TEST_CASE("wsum computes the weighted sum") {
    CliRun r = run({"wsum", "7", "9", "11", "--lambda", "2"});
    REQUIRE(r.code == 0);
    json obj = json::parse(r.out);
    CHECK(obj["lambda"] == "2");
    CHECK(obj["weighted"]["re"] == "2160333442");
    CHECK(obj["weighted"]["im"] == "0");
}

TEST_CASE("check appends an oracle block and keeps exit 0 on agreement") {
    CliRun r = run({"extra", "--a", "14", "--d", "3", "--k", "4", "--K", "8",
                    "--check"});
    REQUIRE(r.code == 0);
    json obj = json::parse(r.out);
    CHECK(obj["s"] == 953);
    CHECK(obj["oracle"]["s"] == 953);
    CHECK(obj["oracle"]["match"] == true);
}

TEST_CASE("check exits 2 when the fast path disagrees") {
    // the documented geometric exception
    CliRun r = run({"geom", "--a", "17", "--k", "4", "--check"});
    CHECK(r.code == 2);
    json obj = json::parse(r.out);
    CHECK(obj["s"] == 724);
    CHECK(obj["oracle"]["s"] == 658);
    CHECK(obj["oracle"]["match"] == false);
}

TEST_CASE("verify reports mismatches with exit 2") {
    CliRun r = run({"verify", "--family", "geom", "--max-a", "20", "--ks", "4"});
    CHECK(r.code == 2);
    json obj = json::parse(r.out);
    CHECK(obj["mismatch_count"] == 1);
    CHECK(obj["mismatches"][0]["params"] == "a=17,k=4");
}

TEST_CASE("verify csv output") {
    CliRun r = run({"verify", "--family", "geom", "--max-a", "17", "--ks", "4",
                    "--format", "csv"});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("family,params,quantity,expected,got,ok\n", 0) == 0);
    CHECK(r.out.find("geom,\"a=17,k=4\",s:closed,\"658\",\"724\",0") !=
          std::string::npos);
}

TEST_CASE("identical argv produces byte-identical output") {
    std::vector<std::string> argv{"verify", "--family", "ap",
                                  "--max-a", "9", "--jobs", "3"};
    CliRun a = run(argv);
    CliRun b = run(argv);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    CliRun c = run({"report", "6", "11", "16", "21", "--list", "--check"});
    CliRun d = run({"report", "6", "11", "16", "21", "--list", "--check"});
    CHECK(c.out == d.out);
}

TEST_CASE("--check only appends, never changes the primary result") {
    for (auto argv : std::vector<std::vector<std::string>>{
             {"report", "6", "11", "16", "21", "--list", "--lambda", "i"},
             {"ap", "--a", "7", "--d", "2", "--k", "3"},
             {"extra", "--a", "14", "--d", "3", "--k", "4", "--K", "8"},
             {"geom", "--a", "17", "--k", "4"},
             {"quadruple", "--a", "9", "--c", "5"}}) {
        json plain = json::parse(run(argv).out);
        argv.push_back("--check");
        json checked = json::parse(run(argv).out);
        checked.erase("oracle");
        CHECK(plain == checked);
    }
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"ap", "--a", "7"}).code == 1);                  // missing required
    CHECK(run({"report"}).code == 1);                          // missing generators
    CHECK(run({"ap", "--a", "7", "--d", "2", "--k", "3", "--sum", "--g"}).code == 1);
}

TEST_CASE("validation errors exit 1") {
    CHECK(run({"report", "4", "6"}).code == 1);                       // gcd 2
    CHECK(run({"wsum", "4", "7", "11", "--lambda", "1"}).code == 1);  // degenerate
    CHECK(run({"wsum", "4", "7", "11", "--lambda", "0"}).code == 1);
    CHECK(run({"wsum", "4", "7", "11", "--lambda", "2+bogus"}).code == 1);
    CHECK(run({"ap", "--a", "6", "--d", "3", "--k", "3"}).code == 1);  // gcd
    CHECK(run({"quadruple", "--a", "8", "--c", "7"}).code == 1);
    CHECK(run({"report", "2000003", "2000005"}).code == 1);  // a1 cap
}

TEST_CASE("help is available") {
    CliRun top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("verify") != std::string::npos);
    CliRun sub = run({"almost-ap", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--h") != std::string::npos);
}

TEST_CASE("FROBKIT_MAX_CELLS controls the oracle cap") {
    setenv("FROBKIT_MAX_CELLS", "50", 1);
    CliRun r = run({"gaps", "101", "103"});
    CHECK(r.code == 1);
    CHECK(r.err.find("50 cells") != std::string::npos);
    setenv("FROBKIT_MAX_CELLS", "junk", 1);
    CHECK(run({"gaps", "4", "7", "11"}).code == 1);
    unsetenv("FROBKIT_MAX_CELLS");
    CHECK(run({"gaps", "101", "103"}).code == 0);
}

TEST_CASE("gaps subcommand with a weight") {
    CliRun r = run({"gaps", "2", "3", "--lambda", "1/2"});
    REQUIRE(r.code == 0);
    json obj = json::parse(r.out);
    CHECK(obj["gaps"] == json::array({1}));
    CHECK(obj["weighted"]["re"] == "1/2");
}

TEST_CASE("quadruple emits both fast-path values") {
    CliRun r = run({"quadruple", "--a", "11", "--c", "4", "--check"});
    REQUIRE(r.code == 0);
    json obj = json::parse(r.out);
    CHECK(obj["g"] == 32);
    CHECK(obj["s"] == 272);
    CHECK(obj["oracle"]["match"] == true);
}
