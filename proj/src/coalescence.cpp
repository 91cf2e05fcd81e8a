#include "collatz/coalescence.hpp"

#include <chrono>
#include <map>
#include <optional>

#include "descent.hpp"
#include "parallel.hpp"

namespace collatz {

namespace {

// One side of the lockstep expansion. Stops at 1 (absorbing); the orbit
// of 1 itself is the cycle prefix {1, 4, 2}.
class OrbitSide {
public:
    OrbitSide(const Nat& start, std::uint64_t max_steps)
        : from_one_(start == 1), budget_(max_steps), last_(start) {
        index_.emplace(start, 0);
    }

    bool active() const { return active_; }
    bool budget_hit() const { return budget_hit_; }

    std::optional<std::uint64_t> index_of(const Nat& v) const {
        const auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Extends by one step; returns the appended value, or nullopt when
    // the side stopped (absorbed at 1 or out of budget).
    std::optional<Nat> extend() {
        if (!active_) return std::nullopt;
        const bool absorbed = from_one_ ? steps_ >= 2 : last_ == 1;
        if (absorbed) {
            active_ = false;
            return std::nullopt;
        }
        if (steps_ >= budget_) {
            active_ = false;
            budget_hit_ = true;
            return std::nullopt;
        }
        last_ = boost::multiprecision::bit_test(last_, 0) ? Nat(3 * last_ + 1)
                                                          : Nat(last_ >> 1);
        ++steps_;
        index_.emplace(last_, steps_);  // keeps the first occurrence
        return last_;
    }

private:
    bool from_one_;
    bool active_ = true;
    bool budget_hit_ = false;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    Nat last_;
    std::map<Nat, std::uint64_t> index_;
};

}  // namespace

CoalescenceResult coalesce(const Nat& n1, const Nat& n2,
                           std::uint64_t max_steps) {
    if (n1 == 0 || n2 == 0) throw DomainError("coalesce: inputs must be >= 1");

    OrbitSide left(n1, max_steps);
    OrbitSide right(n2, max_steps);

    CoalescenceResult result;
    if (n1 == n2) {
        result.met = true;
        result.meet_value = n1;
        return result;
    }

    while (left.active() || right.active()) {
        if (const auto v = left.extend()) {
            if (const auto j = right.index_of(*v)) {
                result.met = true;
                result.meet_value = *v;
                result.index_left = *left.index_of(*v);
                result.index_right = *j;
                return result;
            }
        }
        if (const auto v = right.extend()) {
            if (const auto i = left.index_of(*v)) {
                result.met = true;
                result.meet_value = *v;
                result.index_left = *i;
                result.index_right = *right.index_of(*v);
                return result;
            }
        }
    }
    result.budget_hit = left.budget_hit() || right.budget_hit();
    return result;
}

CoalescenceResult hypothesis_check(const Nat& n, std::uint64_t max_steps) {
    if (n == 0) throw DomainError("hypothesis_check: input must be >= 1");
    if (is_power_of_two(n)) {
        throw DomainError("hypothesis_check: " + n.str() +
                          " is a power of two, outside the relation's domain");
    }
    return coalesce(n, 3 * n + 2, max_steps);
}

SweepReport hypothesis_sweep(const Nat& range_start, const Nat& range_end,
                             std::uint64_t max_steps, unsigned workers) {
    if (range_start < 1 || range_start > range_end) {
        throw DomainError("hypothesis_sweep: need 1 <= range_start <= range_end");
    }
    const auto t0 = std::chrono::steady_clock::now();

    const Nat total_nat = range_end - range_start + 1;
    if (total_nat > Nat(std::uint64_t(1) << 62)) {
        throw DomainError("hypothesis_sweep: range too large to shard");
    }
    const std::uint64_t total = total_nat.convert_to<std::uint64_t>();

    // Descent memo sized to cover 3n+2 for the whole range when that is
    // affordable; tiny ranges skip the build.
    std::optional<detail::DescentMemo> memo;
    constexpr std::uint64_t kMemoCap = std::uint64_t(1) << 23;
    if (total >= 256) {
        const Nat want = 3 * range_end + 3;
        const std::uint64_t limit =
            want > kMemoCap ? kMemoCap : want.convert_to<std::uint64_t>();
        memo.emplace(limit);
    }
    const detail::DescentMemo* memo_ptr = memo ? &*memo : nullptr;

    struct Partial {
        std::uint64_t checked = 0;
        std::uint64_t succeeded = 0;
        std::vector<Nat> failures;
        Nat max_orbit_value = 0;
        std::uint64_t max_steps_seen = 0;
    };
    const std::uint64_t chunk = 4096;
    const std::uint64_t num_chunks = (total + chunk - 1) / chunk;
    std::vector<Partial> partials(num_chunks);

    detail::for_each_chunk(
        total, chunk, detail::resolve_workers(workers), num_chunks,
        [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
            Partial& p = partials[c];
            for (std::uint64_t off = lo; off < hi; ++off) {
                const Nat n = range_start + off;
                if (is_power_of_two(n)) continue;
                ++p.checked;
                const Nat m = 3 * n + 2;
                const auto sn = detail::orbit_stats(n, max_steps, memo_ptr);
                const auto sm = detail::orbit_stats(m, max_steps, memo_ptr);
                // Both orbits containing 1 is already a meet; only the
                // inconclusive cases need the full lockstep search.
                const bool met = (sn.reached_one && sm.reached_one) ||
                                 coalesce(n, m, max_steps).met;
                if (met) {
                    ++p.succeeded;
                } else {
                    p.failures.push_back(n);
                }
                const Nat& pk = sn.peak > sm.peak ? sn.peak : sm.peak;
                if (pk > p.max_orbit_value) p.max_orbit_value = pk;
                const std::uint64_t st = std::max(sn.steps, sm.steps);
                if (st > p.max_steps_seen) p.max_steps_seen = st;
            }
        });

    SweepReport report;
    report.range_start = range_start;
    report.range_end = range_end;
    for (auto& p : partials) {
        report.checked += p.checked;
        report.succeeded += p.succeeded;
        for (auto& f : p.failures) report.failures.push_back(std::move(f));
        if (p.max_orbit_value > report.max_orbit_value) {
            report.max_orbit_value = p.max_orbit_value;
        }
        report.max_steps_seen = std::max(report.max_steps_seen, p.max_steps_seen);
    }
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace collatz
