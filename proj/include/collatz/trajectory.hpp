#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

enum class TrajectoryStatus {
    ReachedOne,       // 1 was reached within budget; it is the last element
    BudgetExhausted,  // max_steps steps taken without reaching 1
};

const char* to_string(TrajectoryStatus status) noexcept;

/// Forward-orbit prefix of a start value under the unaccelerated map
/// T(n) = n/2 (n even), 3n+1 (n odd).
struct Trajectory {
    Nat start;
    std::vector<Nat> values;  // values.front() == start
    TrajectoryStatus status = TrajectoryStatus::ReachedOne;

    std::uint64_t steps() const { return values.size() - 1; }
};

/// One application of T. Rejects n = 0.
Nat collatz_step(const Nat& n);

/// k-fold application of T; k = 0 returns n unchanged. Rejects n = 0.
Nat collatz_iterate(const Nat& n, std::uint64_t k);

/// Orbit prefix until 1 is first reached or max_steps steps are taken.
/// trajectory(1, b) is {1} with status ReachedOne for any budget.
Trajectory trajectory(const Nat& n, std::uint64_t max_steps);

/// Least k with T^k(n) = 1, or nullopt if not found within max_steps.
std::optional<std::uint64_t> total_stopping_steps(const Nat& n,
                                                  std::uint64_t max_steps);

}  // namespace collatz
