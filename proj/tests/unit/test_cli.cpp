#include "doctest.h"

#include "hq/cli.hpp"
#include "hq/error.hpp"
#include "hq/io.hpp"
#include "oracle.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hq;

namespace {

const std::string kFixtures = HQ_FIXTURE_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("hq_unit_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("json round trip") {
    using io::json;
    const json r = io::to_json(make_rat(-3, 4));
    CHECK(r == "-3/4");
    CHECK(io::to_json(Rat(7)) == 7);
    CHECK(io::rat_from_json(json("-3/4"), "x") == make_rat(-3, 4));
    CHECK(io::rat_from_json(json(5), "x") == 5);
    const Rat big = parse_rat("123456789012345678901234567890");
    CHECK(io::rat_from_json(io::to_json(big), "x") == big);
    CHECK_THROWS_AS(io::rat_from_json(json(1.5), "x"), ParseError);

    oracle::Gen g(81);
    for (int n = 0; n < 50; ++n) {
        const QPoly f = g.poly(5);
        CHECK(io::poly_from_json(json::parse(io::to_json(f).dump()), "f") == f);
        const Quat q = g.quat();
        CHECK(io::quat_from_json(io::to_json(q), "q") == q);
        RawProblem p{{{g.quat(), g.quat()}}, {{g.quat(), g.quat()}}};
        CHECK(io::problem_from_json(io::to_json(p)) == p);
    }
}

TEST_CASE("json errors name the field") {
    using io::json;
    try {
        io::problem_from_json(json::parse(R"({"left":[{"node":[0,1,0,0],"value":[1,"1/0",0,0]}]})"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("left[0].value[1]") != std::string::npos);
    }
    CHECK_THROWS_AS(io::problem_from_json(json::parse(R"({"left":[{"node":[0,1,0],"value":[1,0,0,0]}]})")),
                    ParseError);
    CHECK_THROWS_AS(io::problem_from_json(json::parse(R"({"left":[{"node":[0,1,0,0]}]})")), ParseError);
    CHECK_THROWS_AS(io::problem_from_json(json::parse(R"({"top":[]})")), ParseError);
    CHECK_THROWS_AS(io::problem_from_json(json::parse(
                        R"({"right":[{"node":[0,1,0,0],"value":[1,0,0,0]},{"node":[0,1,0,0],"value":[0,0,0,0]}]})")),
                    ParseError);
    CHECK(io::parse_quat_arg("[0, 1, \"1/2\", 0]") == Quat(0, 1, make_rat(1, 2), 0));
    CHECK(io::parse_quat_arg("i+j") == Quat(0, 1, 1, 0));
}

TEST_CASE("solve command exit codes") {
    const auto ok = run({"solve", kFixtures + "/consistent.json"});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("particular: ") != std::string::npos);
    CHECK(ok.out.find("paired term 0") != std::string::npos);

    const auto bad = run({"solve", kFixtures + "/inconsistent.json"});
    CHECK(bad.code == cli::kInconsistent);
    CHECK(bad.err.find("lhs: -1+k") != std::string::npos);
    CHECK(bad.err.find("rhs: 1-k") != std::string::npos);

    const auto broken = run({"solve", kFixtures + "/malformed.json"});
    CHECK(broken.code == cli::kUsage);
    CHECK(broken.err.find("left[0].value[1]") != std::string::npos);

    CHECK(run({"solve", "/nonexistent/problem.json"}).code == cli::kUsage);
    CHECK(run({"solve"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"solve", kFixtures + "/consistent.json", "--method", "newton"}).code == cli::kUsage);
    CHECK(run({"solve", kFixtures + "/consistent.json", "--method", "simplex"}).code == cli::kUsage);
    CHECK(run({"solve", kFixtures + "/consistent.json", "--mu", "3:1,1"}).code == cli::kUsage);
    CHECK(run({"solve", kFixtures + "/consistent.json", "--constraint", "0:1"}).code == cli::kInconsistent);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("solve output is reproducible and verifiable") {
    const std::string problem = kFixtures + "/consistent.json";
    const auto a = run({"solve", problem, "--json"});
    const auto b = run({"solve", problem, "--json"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = io::json::parse(a.out);
    const std::string poly = temp_file("particular.json", j.at("particular").dump());
    const auto v = run({"verify", problem, poly});
    CHECK(v.code == cli::kOk);
    CHECK(v.out.find("FAIL") == std::string::npos);

    // Perturb one coefficient.
    auto perturbed = j.at("particular");
    perturbed[0][0] = io::to_json(io::rat_from_json(perturbed[0][0], "c") + 1);
    const std::string wrong = temp_file("perturbed.json", perturbed.dump());
    const auto w = run({"verify", problem, wrong});
    CHECK(w.code == cli::kInconsistent);
    CHECK(w.out.find("FAIL left node i:") != std::string::npos);

    const std::string zero = temp_file("zero.json", "[]");
    CHECK(run({"verify", problem, zero}).code == cli::kInconsistent);

    // Instantiation through the command line satisfies the data.
    const std::string h = temp_file("h.json", "[[1,0,0,0],[0,1,0,0]]");
    const auto inst = run({"solve", problem, "--json", "--mu", "0:2,-1/3", "--h", h});
    REQUIRE(inst.code == 0);
    const std::string f = temp_file("inst.json", io::json::parse(inst.out).at("instantiated").dump());
    CHECK(run({"verify", problem, f}).code == cli::kOk);
}

TEST_CASE("constraint through the command line") {
    const std::string problem = temp_file("pair.json", R"({"left":[{"node":[0,1,0,0],"value":[0,0,0,0]}],
        "right":[{"node":[0,0,1,0],"value":[0,0,0,0]}]})");
    const auto r = run({"solve", problem, "--constraint", "0:i+j"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("constraint 0: mu = ") != std::string::npos);
    CHECK(run({"solve", problem, "--constraint", "0:1"}).code == cli::kInconsistent);
    CHECK(run({"solve", problem, "--constraint", "0:i+j", "--mu", "0:1,1"}).code == cli::kUsage);
}

TEST_CASE("auxiliary commands") {
    const auto m = run({"minpoly", "--side", "left", "[[0,1,0,0],[0,0,1,0]]"});
    CHECK(m.code == 0);
    CHECK(m.out.find("left minimal polynomial: 1 + z^2\n") != std::string::npos);
    CHECK(run({"minpoly", "i", "i"}).code == cli::kUsage);

    const auto s = run({"sylvester", "i", "j", "i+j"});
    CHECK(s.code == 0);
    CHECK(s.out.find("no solution: conj(a) delta = 1-k differs from delta b = -1+k") != std::string::npos);
    const auto s2 = run({"sylvester", "i", "j", "i-j", "--json"});
    CHECK(io::json::parse(s2.out).at("kind") == "affine");

    const std::string f = temp_file("zj.json", "[[0,0,0,0],[0,0,1,0]]");
    CHECK(run({"eval", "--side", "left", f, "i"}).out == "k\n");
    CHECK(run({"eval", "--side", "right", f, "i"}).out == "-k\n");

    const auto red = run({"reduce", kFixtures + "/consistent.json"});
    CHECK(red.code == 0);
    CHECK(red.out.find("right condition at 3 is real, moved to the left") != std::string::npos);
    CHECK(run({"reduce", kFixtures + "/inconsistent.json"}).code == cli::kInconsistent);
}
