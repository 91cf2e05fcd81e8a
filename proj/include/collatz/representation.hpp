#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

/// Nondecreasing exponent sequence (a_0, ..., a_{k+1}), length >= 2, that
/// stands for the integer
///
///     (2^{a_{k+1}} - sum_{i=0}^{k} 2^{a_i} * 3^{k-i}) / 3^{k+1}.
///
/// Construction enforces length and monotonicity; whether the sequence
/// actually decodes to a positive integer is checked by decode/validate.
class RSequence {
public:
    /// Throws SequenceError(TooShort) for length < 2 and
    /// SequenceError(NotMonotone) when any a_i > a_{i+1}.
    static RSequence from_exponents(std::vector<std::uint64_t> exponents);

    std::span<const std::uint64_t> exponents() const { return exponents_; }
    std::size_t size() const { return exponents_.size(); }

    /// The k of the formula: size() - 2.
    std::uint64_t order() const { return exponents_.size() - 2; }

    bool operator==(const RSequence&) const = default;

private:
    explicit RSequence(std::vector<std::uint64_t> exponents)
        : exponents_(std::move(exponents)) {}

    std::vector<std::uint64_t> exponents_;
};

struct EncodeResult {
    RSequence sequence;
    /// Set when the input was a power of two and the closed-form fallback
    /// (j, j+2) was used instead of the reverse-walk construction.
    bool power_of_two_input = false;
};

/// Exact value of the representation formula. The input only needs to be
/// monotone; throws SequenceError(NonPositive) when the numerator is <= 0
/// and SequenceError(NotDivisible) when 3^{k+1} does not divide it.
Nat decode(const RSequence& s);

/// Canonical encoding of n >= 1, built by walking the trajectory of n
/// in reverse from 1 and replaying the closure transforms. Powers of two
/// take the (j, j+2) fallback and set the flag; n = 1 encodes as (0, 2).
/// Returns nullopt when the trajectory does not reach 1 within max_steps.
std::optional<EncodeResult> encode(const Nat& n, std::uint64_t max_steps);

/// Adds 1 to every exponent; decode of the result is exactly doubled.
RSequence double_transform(const RSequence& s);

/// Doubles the sequence and prepends 0, sending decode(s) = m to
/// (2m - 1)/3. Requires m congruent to 2 mod 3; throws
/// SequenceError(NotApplicable) otherwise.
RSequence odd_inverse_transform(const RSequence& s);

/// Full membership check on a raw integer list: nondecreasing (with the
/// implicit leading 0 <= a_0, so negative entries are NotMonotone),
/// length >= 2, and decode succeeds.
RSequence validate(std::span<const std::int64_t> raw);

/// CLI interchange format: comma-separated decimal exponents, e.g.
/// "0,1,3,6,10". Whitespace around tokens is ignored. Malformed tokens
/// (empty, non-decimal, leading zeros) throw DomainError.
std::vector<std::int64_t> parse_sequence_text(std::string_view text);

std::string sequence_to_text(const RSequence& s);

}  // namespace collatz
