#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "atlas/cli.hpp"

using namespace atlas;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lift prints the witness matrix of the paper example") {
    auto r = run({"lift", "--poly", "1,-5,-5", "--ell", "5", "--partition", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "[[0,5],[1,5]]\n");
}

TEST_CASE("torsion reports the four classes of the q=7 surface") {
    auto r = run({"torsion", "--poly", "1,-1,8,-7,49", "--q", "7", "--ell", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("4 classes") != std::string::npos);
    CHECK(r.out.find("A(t + 4, (2))") != std::string::npos);
    CHECK(r.out.find("A(t + 4, (1,1))") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::string> args{"surface", "--poly", "1,-1,8,-7,49", "--q", "7",
                                  "--ell",   "5",      "--json",       "--seed", "0"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto t1 = run({"tables"});
    auto t2 = run({"tables"});
    CHECK(t1.out == t2.out);
}

TEST_CASE("json output parses and carries the documented schema") {
    auto r = run({"polygon", "--poly", "1,-1,8,-7,49", "--q", "7", "--ell", "5", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("factors"));
    REQUIRE(j["factors"].size() == 2);
    for (const auto& f : j["factors"]) {
        CHECK(f.contains("hbar"));
        CHECK(f.contains("newton_polygon"));
        CHECK(f["newton_polygon"].contains("vertices"));
        CHECK(f.contains("admissible_partitions"));
        CHECK(f["Q"]["ell"] == 5);
        CHECK(f["Q"].contains("residue_poly"));
        CHECK(f["Q"].contains("precision"));
        CHECK(f["Q"].contains("coeffs"));
    }

    auto s = run({"surface", "--poly", "1,0,-1,0,25", "--q", "5", "--ell", "3", "--json"});
    CHECK(s.status == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["case"] == "4");
    CHECK(js["conditions"]["regular"] == true);
    CHECK(js["classes"].size() == 2);
}

TEST_CASE("kummer accepts a single b-vector") {
    auto r = run({"kummer", "--poly", "1,-8,24,-32,16", "--q", "4", "--b", "b1=16", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["zetas"].size() == 1);
    CHECK(j["zetas"][0]["point_counts"][0] == 105);
}

TEST_CASE("exit codes") {
    CHECK(run({"torsion", "--poly", "1,2,nope", "--q", "7", "--ell", "5"}).status == 2);
    CHECK(run({"torsion", "--poly", "1,1,5", "--q", "7", "--ell", "5"}).status == 3);
    CHECK(run({"torsion", "--poly", "1,6,7", "--q", "7", "--ell", "5"}).status == 3);
    CHECK(run({"torsion", "--poly", "1,0,6", "--q", "6", "--ell", "5"}).status == 3);
    CHECK(run({"nonsense"}).status == 2);
    // ell = p is an input error
    CHECK(run({"torsion", "--poly", "1,2,7", "--q", "7", "--ell", "7"}).status == 2);
    // --force-weil downgrades the modulus gate
    CHECK(run({"polygon", "--poly", "1,6,7", "--q", "7", "--ell", "5", "--force-weil"}).status == 0);
}

TEST_CASE("seed is honored and immaterial for the class set") {
    auto a = run({"torsion", "--poly", "1,-1,8,-7,49", "--q", "7", "--ell", "5", "--seed", "1"});
    auto b = run({"torsion", "--poly", "1,-1,8,-7,49", "--q", "7", "--ell", "5", "--seed", "99"});
    CHECK(a.out == b.out);
}

TEST_CASE("precision and max-degree flags") {
    auto r = run({"lift", "--poly", "1,-5,-5", "--ell", "5", "--partition", "2", "--precision",
                  "3", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ring"]["precision"] == 3);

    auto t = run({"torsion", "--poly", "1,-1,8,-7,49", "--q", "7", "--ell", "5",
                  "--max-degree", "4"});
    CHECK(t.status == 0);
    CHECK(t.out.find("b1=") != std::string::npos);
}
