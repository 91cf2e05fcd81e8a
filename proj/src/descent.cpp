#include "descent.hpp"

#include <bit>

namespace collatz::detail {

namespace {

constexpr std::uint64_t kFillFuse = 1'000'000;

// Plain bounded walk on u64 values; exact budget-capped stats. Returns
// false when a 3n+1 step would overflow u64 (caller falls back to Nat).
bool bounded_walk_u64(std::uint64_t n, std::uint64_t max_steps,
                      OrbitStats& out) {
    std::uint64_t v = n;
    std::uint64_t peak = n;
    std::uint64_t steps = 0;
    while (v != 1 && steps < max_steps) {
        if (v & 1) {
            if (v > kMaxSafeStepU64) return false;
            v = 3 * v + 1;
            if (v > peak) peak = v;
        } else {
            v >>= 1;
        }
        ++steps;
    }
    out.steps = steps;
    out.peak = peak;
    out.reached_one = (v == 1);
    return true;
}

OrbitStats bounded_walk_nat(const Nat& n, std::uint64_t max_steps) {
    OrbitStats out;
    Nat v = n;
    out.peak = n;
    while (v != 1 && out.steps < max_steps) {
        if (boost::multiprecision::bit_test(v, 0)) {
            v = 3 * v + 1;
            if (v > out.peak) out.peak = v;
        } else {
            v >>= 1;
        }
        ++out.steps;
    }
    out.reached_one = (v == 1);
    return out;
}

}  // namespace

DescentMemo::DescentMemo(std::uint64_t limit)
    : limit_(limit), steps_(limit, kUnknown), peak_(limit, 0) {
    if (limit_ > 1) {
        steps_[1] = 0;
        peak_[1] = 1;
    }
    for (std::uint64_t v = 2; v < limit_; ++v) {
        std::uint64_t cur = v;
        std::uint64_t pk = v;
        std::uint64_t walked = 0;
        while (true) {
            if (cur < v && steps_[cur] != kUnknown) {
                const std::uint64_t total = walked + steps_[cur];
                if (total >= kUnknown) break;  // leave unknown
                steps_[v] = static_cast<std::uint32_t>(total);
                peak_[v] = pk > peak_[cur] ? pk : peak_[cur];
                break;
            }
            if (walked >= kFillFuse) break;
            if (cur & 1) {
                if (cur > kMaxSafeStepU64) break;
                cur = 3 * cur + 1;
                if (cur > pk) pk = cur;
                // fold the guaranteed halvings in
                const int shift = std::countr_zero(cur);
                cur >>= shift;
                walked += 1 + static_cast<std::uint64_t>(shift);
            } else {
                const int shift = std::countr_zero(cur);
                cur >>= shift;
                walked += static_cast<std::uint64_t>(shift);
            }
        }
    }
}

OrbitStats orbit_stats(const Nat& n, std::uint64_t max_steps,
                       const DescentMemo* memo) {
    if (n <= kMaxSafeStepU64) {
        const std::uint64_t start = n.convert_to<std::uint64_t>();
        std::uint64_t v = start;
        std::uint64_t peak = start;
        std::uint64_t steps = 0;
        bool overflow = false;
        while (v != 1 && steps < max_steps) {
            if (memo != nullptr && memo->certified(v)) {
                const std::uint64_t total = steps + memo->steps(v);
                if (total <= max_steps) {
                    OrbitStats out;
                    out.steps = total;
                    out.peak = peak > memo->peak(v) ? peak : memo->peak(v);
                    out.reached_one = true;
                    return out;
                }
                // certified tail does not fit the budget: the capped peak
                // must count only the first max_steps values, so redo the
                // walk without the shortcut
                OrbitStats out;
                if (bounded_walk_u64(start, max_steps, out)) return out;
                return bounded_walk_nat(n, max_steps);
            }
            if (v & 1) {
                if (v > kMaxSafeStepU64) {
                    overflow = true;
                    break;
                }
                v = 3 * v + 1;
                if (v > peak) peak = v;
            } else {
                v >>= 1;
            }
            ++steps;
        }
        if (!overflow) {
            OrbitStats out;
            out.steps = steps;
            out.peak = peak;
            out.reached_one = (v == 1);
            return out;
        }
        return bounded_walk_nat(n, max_steps);
    }

    // Large start: walk Nats until the value drops into memo/u64 range.
    OrbitStats out;
    Nat v = n;
    out.peak = n;
    while (v != 1 && out.steps < max_steps) {
        if (v <= kMaxSafeStepU64) {
            OrbitStats tail = orbit_stats(v, max_steps - out.steps, memo);
            out.steps += tail.steps;
            if (tail.peak > out.peak) out.peak = tail.peak;
            out.reached_one = tail.reached_one;
            return out;
        }
        if (boost::multiprecision::bit_test(v, 0)) {
            v = 3 * v + 1;
            if (v > out.peak) out.peak = v;
        } else {
            v >>= 1;
        }
        ++out.steps;
    }
    out.reached_one = (v == 1);
    return out;
}

}  // namespace collatz::detail
