#include <doctest.h>

#include <json.hpp>

#include "collatz/lemmas.hpp"
#include "collatz/representation.hpp"
#include "oracle.hpp"

using namespace collatz;

TEST_CASE("lemma2 boundary values") {
    // base case of the inequality: 3^5 + 2 = 245 < 257 = 2^8 + 1
    CHECK(pow3(5) + 2 == 245);
    CHECK((Nat(1) << 8) + 1 == 257);
    CHECK(lemma2_check(8));

    // 3^9 = 19683 vs (2^7 - 1)^2 = 16129
    CHECK_FALSE(lemma2_check(7));
    // 3^4 = 81 vs (2^2 - 1)^2 = 9
    CHECK_FALSE(lemma2_check(2));
    for (std::uint64_t a = 1; a <= 7; ++a) CHECK_FALSE(lemma2_check(a));
    for (std::uint64_t a = 8; a <= 256; ++a) CHECK(lemma2_check(a));
}

TEST_CASE("lemma3 on the documented cases") {
    const Lemma3Outcome a = lemma3_check(12, 100);
    CHECK(a.epsilon == 2);
    CHECK(a.odd_part == 3);
    CHECK(a.target == 10);
    CHECK(a.k_found == 3);  // 13 -> 40 -> 20 -> 10
    CHECK(a.k_predicted == 3);

    const Lemma3Outcome b = lemma3_check(2, 100);
    CHECK(b.epsilon == 1);
    CHECK(b.odd_part == 1);
    CHECK(b.target == 5);
    CHECK(b.k_found == 2);  // 3 -> 10 -> 5
    CHECK(b.k_predicted == 2);

    const Lemma3Outcome c = lemma3_check(4, 100);
    CHECK(c.target == 4);
    CHECK(c.k_found == 3);  // 5 -> 16 -> 8 -> 4
    CHECK(c.k_predicted == 3);

    CHECK_THROWS_AS(lemma3_check(13, 100), DomainError);
    CHECK_THROWS_AS(lemma3_check(0, 100), DomainError);
}

TEST_CASE("lemma3 search budget shortfall is data, not an exception") {
    const Lemma3Outcome tight = lemma3_check(12, 2);  // needs k = 3
    CHECK_FALSE(tight.k_found.has_value());
    CHECK(tight.k_predicted == 3);
}

TEST_CASE("lemma3 target is verifiable by direct iteration") {
    for (std::uint64_t n = 2; n <= 5000; n += 2) {
        const Lemma3Outcome o = lemma3_check(n, 500);
        REQUIRE(o.k_found.has_value());
        REQUIRE(o.k_found == o.k_predicted);
        // independent check of T^{k_found}(n+1) == target
        std::uint64_t v = n + 1;
        for (std::uint64_t k = 0; k < *o.k_found; ++k) v = oracle::step(v);
        REQUIRE(o.target == v);
    }
}

TEST_CASE("lemma4 on the documented cases") {
    const Lemma3Outcome a2 = lemma4_check(2, 100);
    CHECK(a2.target == 4);
    CHECK(a2.k_found == 3);

    const Lemma3Outcome a3 = lemma4_check(3, 100);
    CHECK(a3.target == 11);  // 9 -> 28 -> 14 -> 7 -> 22 -> 11
    CHECK(a3.k_found == 5);

    const Lemma3Outcome a8 = lemma4_check(8, 100);
    CHECK(a8.target == pow3(4) + 1);
    CHECK(a8.target == 82);
    CHECK(a8.k_found == 12);

    CHECK_THROWS_AS(lemma4_check(0, 100), DomainError);
}

TEST_CASE("lemma4 verified through a = 64 with k_max = 3a") {
    for (std::uint64_t a = 1; a <= 64; ++a) {
        const Lemma3Outcome o = lemma4_check(a, 3 * a);
        REQUIRE(o.k_found.has_value());
        REQUIRE(o.k_found == o.k_predicted);
        REQUIRE(o.odd_part == 1);
    }
}

TEST_CASE("lemma4 agrees field-for-field with lemma3 on 2^a") {
    for (std::uint64_t a = 1; a <= 16; ++a) {
        const Lemma3Outcome via4 = lemma4_check(a, 200);
        const Lemma3Outcome via3 = lemma3_check(Nat(1) << a, 200);
        CHECK(via4.n == via3.n);
        CHECK(via4.epsilon == via3.epsilon);
        CHECK(via4.odd_part == via3.odd_part);
        CHECK(via4.target == via3.target);
        CHECK(via4.k_found == via3.k_found);
        CHECK(via4.k_predicted == via3.k_predicted);
    }
}

TEST_CASE("theorem1 sweep over small golden ranges") {
    const Theorem1Sweep s = theorem1_sweep(3, 100, 10000, 2);
    CHECK(s.report.checked == 98);
    CHECK(s.report.succeeded == 98);
    CHECK(s.report.failures.empty());
    CHECK(s.records.size() == 98);
    CHECK(s.report.max_orbit_value == 9232);
    CHECK(s.report.max_steps_seen == 118);
    for (const auto& r : s.records) CHECK(r.encoded);

    const Theorem1Sweep eleven = theorem1_sweep(11, 11, 10000, 1);
    REQUIRE(eleven.records.size() == 1);
    CHECK(eleven.records[0].sequence_length == 5);  // (0,1,3,6,10)
    CHECK_FALSE(eleven.records[0].power_of_two);

    const Theorem1Sweep sixteen = theorem1_sweep(16, 16, 10000, 1);
    REQUIRE(sixteen.records.size() == 1);
    CHECK(sixteen.records[0].encoded);
    CHECK(sixteen.records[0].power_of_two);
    CHECK(sixteen.records[0].sequence_length == 2);  // (4,6)

    CHECK_THROWS_AS(theorem1_sweep(5, 4, 100, 1), DomainError);
}

TEST_CASE("theorem1 sweep golden statistics at 1e3") {
    const Theorem1Sweep s = theorem1_sweep(2, 1000, 10000, 2);
    CHECK(s.report.checked == 999);
    CHECK(s.report.succeeded == 999);
    CHECK(s.report.max_orbit_value == 250504);
    CHECK(s.report.max_steps_seen == 178);
}

TEST_CASE("theorem1 sweep records are deterministic across workers") {
    const Theorem1Sweep one = theorem1_sweep(2, 5000, 10000, 1);
    const Theorem1Sweep four = theorem1_sweep(2, 5000, 10000, 4);
    CHECK(to_json(one.report) == to_json(four.report));
    CHECK(to_csv(std::span<const TheoremSweepRecord>(one.records)) ==
          to_csv(std::span<const TheoremSweepRecord>(four.records)));
}

TEST_CASE("case3 inequality audit") {
    const auto rows = case3_inequality_audit(64);
    REQUIRE(rows.size() == 64);
    auto row = [&](std::uint64_t a) { return rows.at(a - 1); };

    CHECK(row(8).lemma2_holds);
    CHECK(row(8).floor_bound_holds);
    CHECK_FALSE(row(5).lemma2_holds);
    CHECK(row(5).floor_bound_holds);  // 3^3 + 2 = 29 < 33
    CHECK_FALSE(row(1).lemma2_holds);
    CHECK_FALSE(row(1).floor_bound_holds);  // 5 < 3 fails

    // which a < 8 satisfy the floor bound: exactly 5 and 7
    for (std::uint64_t a = 1; a <= 7; ++a) {
        CHECK(row(a).floor_bound_holds == (a == 5 || a == 7));
        CHECK_FALSE(row(a).lemma2_holds);
    }
    for (std::uint64_t a = 8; a <= 64; ++a) {
        CHECK(row(a).lemma2_holds);
        CHECK(row(a).floor_bound_holds);
    }

    CHECK_THROWS_AS(case3_inequality_audit(7), DomainError);
}

TEST_CASE("serializers produce parseable output") {
    const Lemma3Outcome o = lemma3_check(12, 100);
    const auto j = nlohmann::json::parse(to_json(o));
    CHECK(j["n"] == "12");
    CHECK(j["target"] == "10");
    CHECK(j["k_found"] == 3);

    const Lemma3Outcome missing = lemma3_check(12, 2);
    const auto jm = nlohmann::json::parse(to_json(missing));
    CHECK(jm["k_found"].is_null());

    const std::vector<Lemma3Outcome> pair{o, missing};
    CHECK(to_csv(std::span<const Lemma3Outcome>(pair)) ==
          "n,epsilon,odd_part,target,k_found,k_predicted\n"
          "12,2,3,10,3,3\n"
          "12,2,3,10,,3\n");

    const Theorem1Sweep s = theorem1_sweep(11, 13, 10000, 1);
    const auto records = nlohmann::json::parse(
        to_json(std::span<const TheoremSweepRecord>(s.records)));
    REQUIRE(records.size() == 3);
    CHECK(records[0]["n"] == "11");
    CHECK(records[0]["sequence_length"] == 5);

    // canonical forms: 12 -> (2,3,7), 13 -> (0,3,7)
    const std::string csv = to_csv(std::span<const TheoremSweepRecord>(s.records));
    CHECK(csv == "n,encoded,power_of_two,sequence_length\n"
                 "11,true,false,5\n"
                 "12,true,false,3\n"
                 "13,true,false,3\n");

    const auto audit = case3_inequality_audit(8);
    const auto ja = nlohmann::json::parse(to_json(std::span<const Case3Row>(audit)));
    CHECK(ja.size() == 8);
    CHECK(ja[7]["lemma2_holds"] == true);
}
