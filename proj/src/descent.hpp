#pragma once

#include <cstdint>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz::detail {

/// Certified facts about small starts: exact steps to 1 and the exact
/// orbit peak en route. Filled once, read-only afterwards, so sweeps can
/// share one instance across workers. Entries the fill could not certify
/// (fuse or u64 overflow, neither occurs at the sizes used here) stay
/// unknown and queries simply walk through them.
class DescentMemo {
public:
    explicit DescentMemo(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    bool certified(std::uint64_t v) const {
        return v < limit_ && steps_[v] != kUnknown;
    }
    std::uint32_t steps(std::uint64_t v) const { return steps_[v]; }
    std::uint64_t peak(std::uint64_t v) const { return peak_[v]; }

private:
    static constexpr std::uint32_t kUnknown = UINT32_MAX;

    std::uint64_t limit_;
    std::vector<std::uint32_t> steps_;
    std::vector<std::uint64_t> peak_;
};

/// Budget-capped orbit statistics of n: if 1 is reached within max_steps,
/// steps is the exact stopping count and peak the exact orbit maximum;
/// otherwise steps = max_steps and peak covers exactly the first
/// max_steps values after n. The memo only accelerates the computation,
/// the result is identical with or without it.
struct OrbitStats {
    std::uint64_t steps = 0;
    Nat peak;
    bool reached_one = false;
};

OrbitStats orbit_stats(const Nat& n, std::uint64_t max_steps,
                       const DescentMemo* memo);

}  // namespace collatz::detail
