#pragma once

#include <cstdint>

#include "collatz/nat.hpp"
#include "collatz/sweep_report.hpp"

namespace collatz {

/// Outcome of a lockstep orbit-intersection search. Indices are the
/// first-occurrence positions of meet_value in each orbit.
struct CoalescenceResult {
    bool met = false;
    Nat meet_value;  // meaningful only when met
    std::uint64_t index_left = 0;
    std::uint64_t index_right = 0;
    bool budget_hit = false;
};

/// Expands both orbits in lockstep (left, right, left, ...) and reports
/// the first value observed in both, by discovery time, ties broken by
/// smaller index_left. An orbit stops extending once it reaches 1; the
/// orbit of 1 itself is {1, 4, 2}. Each orbit takes at most max_steps
/// steps; if both stop without a common element, met is false and
/// budget_hit records whether a budget cut was the cause.
CoalescenceResult coalesce(const Nat& n1, const Nat& n2,
                           std::uint64_t max_steps);

/// coalesce(n, 3n+2). Rejects powers of two (the relation is only
/// claimed off 2^N) and n = 0.
CoalescenceResult hypothesis_check(const Nat& n, std::uint64_t max_steps);

/// Runs hypothesis_check over every non-power-of-two n in
/// [range_start, range_end]. Failures (no meet within budget) are data,
/// not errors. Uses a shared descent memo internally; the report is a
/// pure function of (range, max_steps) regardless of memo or workers.
/// workers = 0 means one per hardware thread.
SweepReport hypothesis_sweep(const Nat& range_start, const Nat& range_end,
                             std::uint64_t max_steps, unsigned workers);

}  // namespace collatz
