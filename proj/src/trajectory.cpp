#include "collatz/trajectory.hpp"

namespace collatz {

namespace {

void require_positive(const Nat& n, const char* op) {
    if (n == 0) throw DomainError(std::string(op) + ": input must be >= 1");
}

}  // namespace

const char* to_string(TrajectoryStatus status) noexcept {
    switch (status) {
        case TrajectoryStatus::ReachedOne: return "ReachedOne";
        case TrajectoryStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

Nat collatz_step(const Nat& n) {
    require_positive(n, "collatz_step");
    if (boost::multiprecision::bit_test(n, 0)) {
        return 3 * n + 1;
    }
    return n >> 1;
}

Nat collatz_iterate(const Nat& n, std::uint64_t k) {
    require_positive(n, "collatz_iterate");
    Nat v = n;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (boost::multiprecision::bit_test(v, 0)) {
            v = 3 * v + 1;
        } else {
            v >>= 1;
        }
    }
    return v;
}

Trajectory trajectory(const Nat& n, std::uint64_t max_steps) {
    require_positive(n, "trajectory");
    Trajectory t;
    t.start = n;
    t.values.reserve(64);
    t.values.push_back(n);
    while (t.values.back() != 1 && t.steps() < max_steps) {
        t.values.push_back(collatz_step(t.values.back()));
    }
    t.status = (t.values.back() == 1) ? TrajectoryStatus::ReachedOne
                                      : TrajectoryStatus::BudgetExhausted;
    return t;
}

std::optional<std::uint64_t> total_stopping_steps(const Nat& n,
                                                  std::uint64_t max_steps) {
    require_positive(n, "total_stopping_steps");

    // u64 fast path; falls back to Nat on (unlikely) overflow.
    if (n <= kMaxSafeStepU64) {
        std::uint64_t v = n.convert_to<std::uint64_t>();
        std::uint64_t k = 0;
        while (v != 1 && k < max_steps) {
            if (v & 1) {
                if (v > kMaxSafeStepU64) break;  // promote
                v = 3 * v + 1;
            } else {
                v >>= 1;
            }
            ++k;
        }
        if (v == 1) return k;
        if (k == max_steps) return std::nullopt;
        // overflow: resume from v with the remaining budget on Nats
        Nat w = v;
        while (w != 1 && k < max_steps) {
            w = boost::multiprecision::bit_test(w, 0) ? Nat(3 * w + 1) : Nat(w >> 1);
            ++k;
        }
        return w == 1 ? std::optional<std::uint64_t>(k) : std::nullopt;
    }

    Nat v = n;
    std::uint64_t k = 0;
    while (v != 1 && k < max_steps) {
        v = boost::multiprecision::bit_test(v, 0) ? Nat(3 * v + 1) : Nat(v >> 1);
        ++k;
    }
    return v == 1 ? std::optional<std::uint64_t>(k) : std::nullopt;
}

}  // namespace collatz
