#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "collatz/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = collatz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("encode and decode match the documented text output") {
    const CliResult enc = run_cli({"encode", "11", "--format", "text"});
    CHECK(enc.code == 0);
    CHECK(enc.out == "0,1,3,6,10\n");

    const CliResult dec = run_cli({"decode", "0,2"});
    CHECK(dec.code == 0);
    CHECK(dec.out == "1\n");
}

TEST_CASE("decode of encode prints the original input end to end") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const std::string text = std::to_string(n);
        const CliResult enc = run_cli({"encode", text});
        REQUIRE(enc.code == 0);
        std::string sequence = enc.out;
        REQUIRE(!sequence.empty());
        sequence.pop_back();  // newline
        const CliResult dec = run_cli({"decode", sequence});
        REQUIRE(dec.code == 0);
        REQUIRE(dec.out == text + "\n");
    }
}

TEST_CASE("step, traj and stop-steps") {
    CHECK(run_cli({"step", "11"}).out == "34\n");
    CHECK(run_cli({"step", "1"}).out == "4\n");

    const CliResult t = run_cli({"traj", "11"});
    CHECK(t.code == 0);
    CHECK(t.out == "11\n34\n17\n52\n26\n13\n40\n20\n10\n5\n16\n8\n4\n2\n1\n");

    const CliResult cut = run_cli({"traj", "27", "--max-steps", "10"});
    CHECK(cut.code == 1);  // budget exhausted before reaching 1

    CHECK(run_cli({"stop-steps", "11"}).out == "14\n");
    const CliResult exhausted = run_cli({"stop-steps", "27", "--max-steps", "50"});
    CHECK(exhausted.code == 1);
    CHECK(exhausted.out == "budget-exhausted\n");
}

TEST_CASE("sequence transforms through the CLI") {
    CHECK(run_cli({"double", "0,2"}).out == "1,3\n");
    CHECK(run_cli({"odd-inverse", "0,4"}).out == "0,1,5\n");
    CHECK(run_cli({"validate", "0,2"}).out == "valid\n");

    const CliResult bad = run_cli({"validate", "3,1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("NotMonotone") != std::string::npos);

    const CliResult nodiv = run_cli({"decode", "0,3"});
    CHECK(nodiv.code == 2);
    CHECK(nodiv.err.find("NotDivisible") != std::string::npos);

    const CliResult inapplicable = run_cli({"odd-inverse", "1,5"});
    CHECK(inapplicable.code == 2);
    CHECK(inapplicable.err.find("NotApplicable") != std::string::npos);
}

TEST_CASE("verification failures exit 1, domain errors exit 2") {
    CHECK(run_cli({"lemma2", "8"}).code == 0);
    CHECK(run_cli({"lemma2", "7"}).code == 1);
    CHECK(run_cli({"lemma3", "12"}).code == 0);
    CHECK(run_cli({"lemma3", "13"}).code == 2);   // odd input
    CHECK(run_cli({"hypothesis", "8"}).code == 2);  // power of two
    CHECK(run_cli({"hypothesis", "3"}).code == 0);
    CHECK(run_cli({"coalesce", "27", "31", "--max-steps", "3"}).code == 1);
    CHECK(run_cli({"audit-case3", "16"}).code == 0);
    CHECK(run_cli({"audit-case3", "7"}).code == 2);  // needs a_max >= 8
    CHECK(run_cli({"step", "0"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate", "1"}).code == 2);
    CHECK(run_cli({"step"}).code == 2);
    CHECK(run_cli({"step", "011"}).code == 2);      // leading zero
    CHECK(run_cli({"step", "-4"}).code == 2);
    CHECK(run_cli({"step", "1e3"}).code == 2);
    CHECK(run_cli({"encode", "11", "--format", "yaml"}).code == 2);
    CHECK(run_cli({"decode", "0,99999999"}).code == 2);  // above the CLI cap
}

TEST_CASE("json output is parseable and stable across jobs") {
    const CliResult a =
        run_cli({"sweep-hypothesis", "3", "1000", "--format", "json", "--jobs", "1"});
    const CliResult b =
        run_cli({"sweep-hypothesis", "3", "1000", "--format", "json", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["range_start"] == "3");
    CHECK(j["range_end"] == "1000");
    CHECK(j["checked"] == 990);
    CHECK(j["succeeded"] == 990);
    CHECK(j["failures"].empty());
    CHECK(j["max_orbit_value"] == "1276936");
    CHECK(j["max_steps_seen"] == 179);

    const CliResult t1 =
        run_cli({"sweep-theorem1", "2", "1000", "--format", "json", "--jobs", "1"});
    const CliResult t4 =
        run_cli({"sweep-theorem1", "2", "1000", "--format", "json", "--jobs", "4"});
    CHECK(t1.code == 0);
    CHECK(t1.out == t4.out);

    const CliResult enc = run_cli({"encode", "8", "--format", "json"});
    const auto je = nlohmann::json::parse(enc.out);
    CHECK(je["sequence"] == nlohmann::json::array({3, 5}));
    CHECK(je["power_of_two_input"] == true);

    const CliResult co = run_cli({"coalesce", "3", "11", "--format", "json"});
    const auto jc = nlohmann::json::parse(co.out);
    CHECK(jc["met"] == true);
    CHECK(jc["meet_value"] == "10");
    CHECK(jc["index_left"] == 1);
    CHECK(jc["index_right"] == 8);
}

TEST_CASE("csv output") {
    const CliResult sweep = run_cli({"sweep-hypothesis", "3", "50", "--format", "csv"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out == "n\n");  // no failures, header only

    const CliResult l2 = run_cli({"lemma2", "8", "--format", "csv"});
    CHECK(l2.out == "a,holds\n8,true\n");
}

TEST_CASE("--output writes the payload to a file") {
    const std::string path = "cli_output_test.json";
    const CliResult r = run_cli(
        {"encode", "11", "--format", "json", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    const auto j = nlohmann::json::parse(content.str());
    CHECK(j["sequence"] == nlohmann::json::array({0, 1, 3, 6, 10}));
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("global flags may precede the subcommand") {
    const CliResult r = run_cli({"--format", "json", "step", "11"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"] == "34");
}
