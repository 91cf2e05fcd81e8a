#pragma once

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "collatz/errors.hpp"

namespace collatz {

/// Arbitrary-precision nonnegative integer. Every value the 3x+1 map
/// touches is a Nat; operations that require positivity or parity check
/// it at entry and throw DomainError.
using Nat = boost::multiprecision::cpp_int;

/// n = 2^epsilon * odd_part with odd_part odd and epsilon >= 1.
struct FactoredEven {
    std::uint64_t epsilon = 0;
    Nat odd_part;
};

/// 2-adic valuation of an even n >= 2: the largest e with 2^e | n,
/// together with the odd cofactor. Rejects zero and odd inputs.
inline FactoredEven nu2(const Nat& n) {
    if (n == 0) throw DomainError("nu2: input must be >= 2, got 0");
    if (boost::multiprecision::bit_test(n, 0)) {
        throw DomainError("nu2: input must be even");
    }
    const std::uint64_t e = boost::multiprecision::lsb(n);
    return FactoredEven{e, Nat(n >> e)};
}

/// Membership in {2, 4, 8, ...}. Note 1 is not a member.
inline bool is_power_of_two(const Nat& n) {
    if (n < 2) return false;
    return boost::multiprecision::lsb(n) == boost::multiprecision::msb(n);
}

/// 3^e as a Nat.
inline Nat pow3(std::uint64_t e) {
    Nat p = 1;
    Nat base = 3;
    while (e != 0) {
        if (e & 1) p *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return p;
}

/// 2^e as a Nat.
inline Nat pow2(std::uint64_t e) {
    Nat p = 1;
    return p << e;
}

/// Largest u64 value whose 3n+1 step stays within u64.
inline constexpr std::uint64_t kMaxSafeStepU64 =
    (std::numeric_limits<std::uint64_t>::max() - 1) / 3;

}  // namespace collatz
