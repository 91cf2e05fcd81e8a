#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

/// Aggregate outcome of a range verification. checked always equals
/// succeeded + failures.size(). max_orbit_value / max_steps_seen are the
/// extremes of the budget-capped orbit statistics over the range; both
/// are exact functions of (range, budget) regardless of memoization or
/// worker count.
struct SweepReport {
    Nat range_start;
    Nat range_end;
    std::uint64_t checked = 0;
    std::uint64_t succeeded = 0;
    std::vector<Nat> failures;
    Nat max_orbit_value = 0;
    std::uint64_t max_steps_seen = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// JSON with big values as decimal strings. elapsed is deliberately not
/// serialized: machine output is byte-identical for identical inputs.
std::string to_json(const SweepReport& report);

/// CSV: header plus one row per failure.
std::string to_csv(const SweepReport& report);

/// Human-readable summary, including elapsed time.
std::string to_text(const SweepReport& report);

}  // namespace collatz
