#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sqbetti/io.hpp"

using namespace sqbetti;

namespace {

Monomial mk(int n, std::initializer_list<int> idx) { return Monomial::from_support(n, idx); }

std::string golden(const std::string& name) {
    std::ifstream file(std::string(SQBETTI_TEST_DIR) + "/golden/" + name);
    REQUIRE(file.good());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult cli(std::initializer_list<std::string> args) {
    std::vector<std::string> argv(args);
    std::ostringstream out, err;
    int status = run_cli(argv, out, err);
    return CliResult{status, out.str(), err.str()};
}

} // namespace

TEST_CASE("monomial parsing") {
    CHECK(parse_monomial("x3*x4*x7") == mk(7, {3, 4, 7}));
    CHECK(parse_monomial("x3x4x7") == mk(7, {3, 4, 7}));
    CHECK(parse_monomial("{3,4,7}") == mk(7, {3, 4, 7}));
    CHECK(parse_monomial("x2", 5) == mk(5, {2}));
    CHECK(parse_monomial("1", 3) == Monomial::one(3));
    CHECK_THROWS_AS(parse_monomial("x1*x1"), parse_error);
    CHECK_THROWS_AS(parse_monomial("x0"), parse_error);
    CHECK_THROWS_AS(parse_monomial("y2"), parse_error);
    CHECK_THROWS_AS(parse_monomial("x9", 5), parse_error);
}

TEST_CASE("ideal parsing") {
    MonomialIdeal a = parse_ideal("x1*x2, x1*x3");
    CHECK(a.ambient() == 3);
    CHECK(a.generator_count() == 2);

    MonomialIdeal b = parse_ideal("n=5\n# comment line\nx1*x2\nx1*x3, x1*x2*x4\n");
    CHECK(b.ambient() == 5);
    CHECK(b.generator_count() == 2); // x1*x2*x4 is divisible

    CHECK_THROWS_AS(parse_ideal("x1*x1"), parse_error);
    CHECK_THROWS_AS(parse_ideal("x1*x2\nn=4"), parse_error);

    MonomialIdeal zero = parse_ideal("# nothing\n");
    CHECK(zero.is_zero());

    MonomialIdeal brackets = parse_ideal("n=4\n{1,2}, {1,3}, x2*x3");
    CHECK(brackets.generators() ==
          std::vector<Monomial>{mk(4, {1, 2}), mk(4, {1, 3}), mk(4, {2, 3})});
}

TEST_CASE("parse/emit round trip") {
    std::vector<std::string> fixtures = {
        "n=6\nx1*x2\nx1*x3\nx1*x4\nx1*x5\nx2*x3*x4\nx2*x3*x5\nx2*x3*x6\nx2*x4*x5\nx2*x4*x6\n"
        "x3*x4*x5*x6\n",
        "n=5\nx1*x2*x3\nx1*x2*x4\nx1*x2*x5\nx1*x3*x4\nx2*x3*x4*x5\n",
        "n=4\nx1\n",
        "n=3\nx1*x2\nx1*x3\nx2*x3\n",
    };
    for (const std::string& text : fixtures) {
        MonomialIdeal ideal = parse_ideal(text);
        CHECK(parse_ideal(emit_ideal(ideal)) == ideal);
        CHECK(emit_ideal(ideal) == text);
    }
}

TEST_CASE("random closure ideals survive the emit/parse round trip") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        std::vector<Monomial> gens;
        for (int c = 0; c < 2; ++c) {
            std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
            if (mask == 0) mask = 1;
            auto closure = strongly_stable_closure({Monomial(n, mask)});
            gens.insert(gens.end(), closure.begin(), closure.end());
        }
        MonomialIdeal ideal = minimal_generators(n, gens);
        CHECK(parse_ideal(emit_ideal(ideal)) == ideal);
    }
}

TEST_CASE("betti diagram rendering matches the golden tables") {
    MonomialIdeal n6 = parse_ideal(
        "n=6\nx1*x2, x1*x3, x1*x4, x1*x5, x2*x3*x4, x2*x3*x5, x2*x3*x6, x2*x4*x5, x2*x4*x6, "
        "x3*x4*x5*x6");
    CHECK(render_betti(graded_betti(n6)) == golden("betti_n6.txt"));

    MonomialIdeal n8a = parse_ideal(
        "n=8\nx1*x2, x1*x3, x1*x4, x1*x5, x1*x6, x1*x7, x1*x8, x2*x3*x4, x2*x3*x5, x2*x3*x6, "
        "x2*x3*x7, x2*x3*x8, x2*x4*x5*x6, x2*x4*x5*x7, x2*x4*x5*x8, x2*x4*x6*x7*x8, "
        "x3*x4*x5*x6*x7*x8");
    CHECK(render_betti(graded_betti(n8a)) == golden("betti_n8_deg2.txt"));

    MonomialIdeal n8b = parse_ideal(
        "n=8\nx1*x2*x3, x1*x2*x4, x1*x2*x5, x1*x2*x6, x1*x2*x7, x1*x2*x8, x1*x3*x4*x5, "
        "x1*x3*x4*x6, x1*x3*x4*x7, x1*x3*x4*x8, x1*x3*x5*x6*x7, x1*x3*x5*x6*x8, "
        "x1*x4*x5*x6*x7*x8, x2*x3*x4*x5*x6*x7*x8");
    CHECK(render_betti(graded_betti(n8b)) == golden("betti_n8_deg3.txt"));

    MonomialIdeal n11 = construct_ideal(
        corner_spec_from_json(nlohmann::json::parse(
            R"({"n": 11, "corners": [[8,3],[4,5],[3,6],[2,9]], "values": [7,5,2,2]})")));
    CHECK(render_betti(graded_betti(n11)) == golden("betti_n11_construct.txt"));

    CHECK(render_betti(BettiTable{}).empty());
}

TEST_CASE("betti json export") {
    MonomialIdeal ideal = parse_ideal("n=3\nx1*x2, x1*x3");
    nlohmann::json j = betti_to_json(graded_betti(ideal));
    CHECK(j["projective_dimension"] == 1);
    CHECK(j["regularity"] == 2);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["i"] == 0);
    CHECK(j["entries"][0]["j"] == 2);
    CHECK(j["entries"][0]["value"] == 2);
}

TEST_CASE("betti json switches to strings past the double-safe range") {
    MonomialIdeal wide = minimal_generators(
        64, strongly_stable_closure({Monomial::from_support(64, {63, 64})}));
    nlohmann::json j = betti_to_json(graded_betti(wide));
    bool saw_string = false;
    for (const auto& entry : j["entries"]) {
        if (entry["i"] == 31) {
            CHECK(entry["value"].is_string());
            saw_string = true;
        }
        if (entry["i"] == 0) CHECK(entry["value"] == 2016);
    }
    CHECK(saw_string);
}

TEST_CASE("corner spec json") {
    CornerSpec spec = corner_spec_from_json(nlohmann::json::parse(
        R"({"n": 11, "corners": [[8,3],[4,5],[3,6],[2,9]], "values": [7,5,2,2]})"));
    CHECK(spec.n == 11);
    CHECK(spec.corners.size() == 4);
    CHECK(spec.values[0] == 7);
    CHECK_THROWS_AS(corner_spec_from_json(nlohmann::json::parse(R"({"n": 3})")), parse_error);
}

TEST_CASE("cli betti and corners") {
    CliResult r = cli({"betti", "x1*x2, x1*x3, x1*x4, x2*x3*x4"});
    CHECK(r.status == 0);
    CHECK(r.out == golden("betti_n4_lex.txt"));

    CliResult c = cli({"corners", "x1*x2, x1*x3, x1*x4, x2*x3*x4"});
    CHECK(c.status == 0);
    CHECK(c.out == "C = {(2,2), (1,3)}  a = (1, 1)\n");

    CliResult json = cli({"corners", "x1*x2, x1*x3, x1*x4, x2*x3*x4", "--format", "json"});
    CHECK(json.status == 0);
    nlohmann::json parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["values"] == nlohmann::json::parse("[1,1]"));
}

TEST_CASE("cli count") {
    CliResult r = cli({"count", "x2*x5*x7*x8", "--k", "4", "--l", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "position 24\n");

    CliResult traced = cli({"count", "x2*x5*x7*x8", "--k", "4", "--l", "4", "--trace"});
    CHECK(traced.status == 0);
    CHECK(traced.out.find("[C(6,2)]") != std::string::npos);
    CHECK(traced.out.find("[C(4,1) + C(3,1)]") != std::string::npos);
    CHECK(traced.out.find("= 24") != std::string::npos);

    CliResult mismatch = cli({"count", "x2*x5*x7*x8", "--k", "3", "--l", "4"});
    CHECK(mismatch.status == 2);
}

TEST_CASE("cli construct: exit codes partition the outcomes") {
    CliResult ok = cli({"construct",
                        R"({"n": 10, "corners": [[6,2],[5,4],[3,7]], "values": [1,1,4]})"});
    CHECK(ok.status == 0);
    CHECK(ok.out.find("n=10") != std::string::npos);

    CliResult infeasible = cli({"construct",
                                R"({"n": 10, "corners": [[6,2],[5,4],[3,7]], "values": [2,1,4]})"});
    CHECK(infeasible.status == 1);
    CHECK(infeasible.err.find("corner 1") != std::string::npos);

    CliResult report = cli({"construct",
                            R"({"n": 10, "corners": [[6,2],[5,4],[3,7]], "values": [2,1,4]})",
                            "--format", "json"});
    CHECK(report.status == 1);
    nlohmann::json parsed = nlohmann::json::parse(report.out);
    CHECK(parsed["feasible"] == false);
    CHECK(parsed["failing_corner"] == 1);
    CHECK(parsed["per_corner"][0]["admissible"] == 1);

    CliResult malformed = cli({"construct", "{\"n\": 10"});
    CHECK(malformed.status == 2);

    CliResult unstable = cli({"corners", "x2*x3"});
    CHECK(unstable.status == 2);
    CHECK(unstable.err.find("x1*x2") != std::string::npos);

    CliResult usage = cli({"frobnicate"});
    CHECK(usage.status == 2);
}

TEST_CASE("cli lex, closure, enumerate") {
    CliResult lex = cli({"lex", "--n", "5", "--l1", "3"});
    CHECK(lex.status == 0);
    CHECK(lex.out.find("x1*x3*x4*x5") != std::string::npos);

    CliResult closure = cli({"closure", "x2*x3"});
    CHECK(closure.status == 0);
    CHECK(closure.out == "x1*x2\nx1*x3\nx2*x3\n");

    CliResult enumerate = cli({"enumerate", "--n", "3"});
    CHECK(enumerate.status == 0);
    CHECK(enumerate.out.find("C = {(2,1)}") != std::string::npos);

    CliResult as_json = cli({"enumerate", "--n", "3", "--format", "json"});
    CHECK(as_json.status == 0);
    nlohmann::json rows = nlohmann::json::parse(as_json.out);
    CHECK(rows.size() == 4);
    CHECK(rows[0].contains("witness"));
}

TEST_CASE("cli enumerate bound comes from the environment") {
    CliResult capped = cli({"enumerate", "--n", "6"});
    CHECK(capped.status == 2);
    CHECK(capped.err.find("n=5") != std::string::npos);

    setenv("SQBETTI_ENUM_MAX_N", "6", 1);
    CliResult raised = cli({"enumerate", "--n", "6", "--min-degree", "5"});
    unsetenv("SQBETTI_ENUM_MAX_N");
    CHECK(raised.status == 0);
    CHECK(raised.out.find("C = {(1,5)}") != std::string::npos);
}

TEST_CASE("cli reads ideals from files") {
    std::string path = std::string(SQBETTI_TEST_DIR) + "/golden/ideal_n6.txt";
    CliResult r = cli({"corners", path});
    CHECK(r.status == 0);
    CHECK(r.out == "C = {(3,3), (2,4)}  a = (2, 1)\n");
}
