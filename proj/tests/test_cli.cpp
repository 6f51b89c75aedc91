#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "nilpoly/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = nilpoly::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kGoldens = std::string(NILPOLY_SOURCE_DIR) + "/goldens";

} // namespace

TEST_CASE("check: verdict lines") {
    auto nil = cli({"check", "-x^3+12x^2-43x+46", "5"});
    CHECK(nil.code == 0);
    CHECK(nil.out == "nilpotent, index 4\n");

    auto div = cli({"check", "x^2-4x", "3"});
    CHECK(div.code == 0);
    CHECK(div.out == "not nilpotent (divergent)\n");

    auto per = cli({"check", "-x+7", "3"});
    CHECK(per.code == 0);
    CHECK(per.out == "not nilpotent (eventually periodic)\n");

    auto list_form = cli({"check", "[46,-43,12,-1]", "5"});
    CHECK(list_form.out == "nilpotent, index 4\n");
}

TEST_CASE("orbit: text and json") {
    auto text = cli({"orbit", "-x^3+12x^2-43x+46", "5"});
    CHECK(text.code == 0);
    CHECK(text.out ==
          "start: 5\nvalues: 5 6 4 2 0\ndifferences: 1 -2 -2 -2\nstatus: nilpotent, index 4\n");

    auto as_json = cli({"--json", "orbit", "-x^3+12x^2-43x+46", "5"});
    CHECK(as_json.code == 0);
    json j = json::parse(as_json.out);
    CHECK(j["start"] == 5);
    CHECK(j["values"] == json::array({5, 6, 4, 2, 0}));
    CHECK(j["differences"] == json::array({1, -2, -2, -2}));
    CHECK(j["status"]["kind"] == "nilpotent");
    CHECK(j["status"]["index"] == 4);

    json divergent = json::parse(cli({"--json", "orbit", "x^2-4x", "3"}).out);
    CHECK(divergent["status"]["kind"] == "divergent");
    CHECK(divergent["status"]["escape_step"] == 2);
    CHECK(divergent["status"]["bound"] == 6);

    json periodic = json::parse(cli({"--json", "orbit", "-x+7", "3"}).out);
    CHECK(periodic["status"]["kind"] == "periodic");
    CHECK(periodic["status"]["preperiod"] == 0);
    CHECK(periodic["status"]["cycle"] == json::array({3, 4}));
}

TEST_CASE("enumerate: json schema and counts") {
    json j = json::parse(cli({"--json", "enumerate", "2"}).out);
    CHECK(j["start"] == 2);
    CHECK(j["sequences"].size() == 6);
    CHECK(j["max_index_found"] == 4);
    CHECK(j.contains("nodes_explored"));
    CHECK(!j.contains("families"));

    json with_families = json::parse(cli({"--json", "enumerate", "2", "--families"}).out);
    REQUIRE(with_families.contains("families"));
    CHECK(with_families["families"].size() == 6);
    for (const auto& fam : with_families["families"]) {
        CHECK(fam.contains("sequence"));
        CHECK(fam.contains("interpolant"));
        CHECK(fam.contains("modulus"));
    }

    json capped = json::parse(cli({"--json", "enumerate", "4", "--max-index", "2"}).out);
    CHECK(capped["max_index_found"] == 2);
    CHECK(capped["sequences"].size() == 6);  // the index-1 and index-2 families at 4
}

TEST_CASE("enumerate: start 0 prints the closed form") {
    auto text = cli({"enumerate", "0"});
    CHECK(text.code == 0);
    CHECK(text.out.find("infinitely many") != std::string::npos);
    CHECK(text.out.find("x*p(x)") != std::string::npos);

    json j = json::parse(cli({"--json", "enumerate", "0"}).out);
    CHECK(j["start"] == 0);
    CHECK(j["max_index"] == 2);
    CHECK(j["closed_form"].size() == 2);
}

TEST_CASE("classify and witness") {
    auto unbounded = cli({"classify", "x^2-4x", "3"});
    CHECK(unbounded.out == "unbounded\n");

    auto involution = cli({"classify", "13-x", "4"});
    CHECK(involution.out == "form 5: S=4, R=9\n");

    json j = json::parse(cli({"--json", "classify", "-x^3+5x^2-7x+3", "2"}).out);
    CHECK(j["form"] == 7);
    CHECK(j["S"] == 0);
    CHECK(j["eps"] == 1);

    auto witness = cli({"witness", "5", "--S", "4", "--R", "9"});
    CHECK(witness.code == 0);
    CHECK(witness.out == "-x + 13\n");

    json wj = json::parse(cli({"--json", "witness", "7", "--S", "0", "--eps", "1"}).out);
    CHECK(wj["form"] == 7);
    CHECK(wj["witness"] == "-x^3 + 5x^2 - 7x + 3");
}

TEST_CASE("recurring") {
    auto yes = cli({"recurring", "alternating-zero", "3", "1", "2", "3", "--value", "3"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "realizable: -x^3 + 4x^2 - 4x + 3\n");

    auto no = cli({"recurring", "one-zero-tail", "3", "1", "2", "3"});
    CHECK(no.code == 0);
    CHECK(no.out == "not realizable\n");

    json j = json::parse(cli({"--json", "recurring", "one-zero-tail", "2", "1", "2"}).out);
    CHECK(j["realizable"] == true);
    CHECK(j["witness"] == "-2x^2 + 4x");
}

TEST_CASE("scan") {
    json j = json::parse(cli({"--json", "scan", "1", "1", "-2", "2"}).out);
    CHECK(j["total"] == 45);
    CHECK(j["counterexamples"].empty());
    CHECK(j["bounded"].get<long>() + j["unbounded"].get<long>() == 45);
    CHECK(j["forms"].size() == 7);
}

TEST_CASE("verify: suites pass and are deterministic") {
    auto classification = cli({"verify", "classification", "--goldens", kGoldens});
    CHECK(classification.code == 0);
    CHECK(classification.out.find("[PASS]") != std::string::npos);
    CHECK(classification.out.find("[FAIL]") == std::string::npos);
    CHECK(classification.out.find("passed 12/12") != std::string::npos);

    auto again = cli({"verify", "classification", "--goldens", kGoldens});
    CHECK(again.out == classification.out);

    json j = json::parse(cli({"--json", "verify", "nrr-structure", "--goldens", kGoldens}).out);
    CHECK(j["passed"] == j["total"]);
}

TEST_CASE("verify all: reproducible byte-identical reports") {
    auto first = cli({"verify", "all", "--goldens", kGoldens});
    auto second = cli({"verify", "all", "--goldens", kGoldens});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(cli({"check", "x^2-4x", "3"}).code == 0);

    // domain errors: named error case, exit 1
    auto syntax = cli({"check", "x^+", "3"});
    CHECK(syntax.code == 1);
    CHECK(syntax.err.find("SyntaxError") != std::string::npos);

    auto zero_start = cli({"enumerate", "0", "--max-index", "3"});
    CHECK(zero_start.code == 0);  // answered with the closed form, not an error

    auto bad_suite = cli({"verify", "bogus"});
    CHECK(bad_suite.code == 1);
    CHECK(bad_suite.err.find("UnknownSuite") != std::string::npos);
    CHECK(bad_suite.err.find("classification") != std::string::npos);  // lists known suites

    auto bad_form = cli({"witness", "5", "--S", "4"});
    CHECK(bad_form.code == 1);
    CHECK(bad_form.err.find("InvalidForm") != std::string::npos);

    auto bad_prefix = cli({"recurring", "one-zero-tail", "2", "1"});
    CHECK(bad_prefix.code == 1);
    CHECK(bad_prefix.err.find("DomainError") != std::string::npos);

    // usage errors: exit 2
    CHECK(cli({"check"}).code == 2);
    CHECK(cli({"enumerate", "two"}).code == 2);
    CHECK(cli({"witness", "9", "--S", "1"}).code == 2);
    CHECK(cli({"bogus-subcommand"}).code == 2);
    CHECK(cli({}).code == 2);

    // help is not an error
    CHECK(cli({"--help"}).code == 0);
}
