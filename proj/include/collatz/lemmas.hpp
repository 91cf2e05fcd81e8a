#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collatz/nat.hpp"
#include "collatz/sweep_report.hpp"

namespace collatz {

/// Exact check of 3^{a/2+1} + 2 < 2^a + 1, evaluated through the squared
/// equivalent 3^{a+2} < (2^a - 1)^2 so odd a needs no irrational
/// arithmetic. Holds exactly for a >= 8.
bool lemma2_check(std::uint64_t a);

/// Result of verifying the iterate-of-successor formula for one even n:
/// with n = 2^epsilon * odd_part, T^k(n+1) must land on
///   3^{epsilon/2} * odd_part + 1        (epsilon even)
///   3^{floor(epsilon/2)+1} * odd_part + 2   (epsilon odd).
/// k_found is the least such k within the search budget (nullopt when the
/// target was never hit — a verification failure, reported as data).
/// k_predicted is the closed form 3*epsilon/2 resp. 3*(epsilon-1)/2 + 2.
struct Lemma3Outcome {
    Nat n;
    std::uint64_t epsilon = 0;
    Nat odd_part;
    Nat target;
    std::optional<std::uint64_t> k_found;
    std::uint64_t k_predicted = 0;
};

/// Searches k in [0, k_max]. Rejects odd or zero n.
Lemma3Outcome lemma3_check(const Nat& n, std::uint64_t k_max);

/// The n = 2^a specialization (odd_part = 1). Rejects a = 0.
Lemma3Outcome lemma4_check(std::uint64_t a, std::uint64_t k_max);

/// Per-n record of a representability sweep: encoded means the canonical
/// encoding succeeded AND decoding it returned n.
struct TheoremSweepRecord {
    Nat n;
    bool encoded = false;
    bool power_of_two = false;
    std::uint64_t sequence_length = 0;
};

struct Theorem1Sweep {
    std::vector<TheoremSweepRecord> records;
    SweepReport report;
};

/// Attempts encode + round-trip decode for every n in the range.
/// Budget exhaustions land in report.failures; nothing throws for them.
Theorem1Sweep theorem1_sweep(const Nat& range_start, const Nat& range_end,
                             std::uint64_t max_steps, unsigned workers);

/// One row of the boundary audit around the a >= 8 threshold:
/// lemma2_holds is lemma2_check(a); floor_bound_holds is the exact
/// integer check 3^{floor(a/2)+1} + 2 < 2^a + 1.
struct Case3Row {
    std::uint64_t a = 0;
    bool lemma2_holds = false;
    bool floor_bound_holds = false;
};

/// Rows for a in [1, a_max]; requires a_max >= 8 so the boundary is in view.
std::vector<Case3Row> case3_inequality_audit(std::uint64_t a_max);

std::string to_json(const Lemma3Outcome& outcome);
std::string to_csv(std::span<const Lemma3Outcome> outcomes);
std::string to_json(std::span<const TheoremSweepRecord> records);
std::string to_csv(std::span<const TheoremSweepRecord> records);
std::string to_json(std::span<const Case3Row> rows);
std::string to_csv(std::span<const Case3Row> rows);

}  // namespace collatz
