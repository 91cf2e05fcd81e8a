#pragma once

#include <stdexcept>
#include <string>

namespace collatz {

/// Input outside an operation's domain (zero where n >= 1 is required,
/// odd input to an even-only factorization, a power of two where the
/// hypothesis relation is undefined, malformed ranges).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

enum class SequenceErrorKind {
    TooShort,       // fewer than two exponents
    NotMonotone,    // violates 0 <= a_0 <= a_1 <= ... <= a_{k+1}
    NotDivisible,   // 3^{k+1} does not divide the numerator
    NonPositive,    // numerator is <= 0
    NotApplicable,  // odd-inverse transform on a value not congruent 2 mod 3
};

const char* to_string(SequenceErrorKind kind) noexcept;

/// Exponent-sequence codec failure. Carries the precise failure kind so
/// callers and tests can distinguish the error classes.
class SequenceError : public std::runtime_error {
public:
    SequenceError(SequenceErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    SequenceErrorKind kind() const noexcept { return kind_; }

private:
    SequenceErrorKind kind_;
};

}  // namespace collatz
