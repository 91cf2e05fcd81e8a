#include "collatz/representation.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace collatz {

namespace {

// +1 on every exponent; shared by the public transforms and the encode
// reverse walk so both produce identical arithmetic.
void bump_all(std::vector<std::uint64_t>& exps) {
    for (auto& e : exps) ++e;
}

// Parity trace of the trajectory of n: odd[i] is the parity of T^i(n),
// for i in [0, steps). reached_one is false when the budget ran out.
struct ParityWalk {
    std::vector<std::uint8_t> odd;
    bool reached_one = false;
};

ParityWalk parity_walk(const Nat& n, std::uint64_t max_steps) {
    ParityWalk w;
    w.odd.reserve(128);

    if (n <= kMaxSafeStepU64) {
        std::uint64_t v = n.convert_to<std::uint64_t>();
        bool overflowed = false;
        while (v != 1 && w.odd.size() < max_steps) {
            if (v & 1) {
                if (v > kMaxSafeStepU64) {
                    overflowed = true;
                    break;
                }
                w.odd.push_back(1);
                v = 3 * v + 1;
            } else {
                w.odd.push_back(0);
                v >>= 1;
            }
        }
        if (!overflowed) {
            w.reached_one = (v == 1);
            return w;
        }
        w.odd.clear();  // redo the walk on Nats
    }

    Nat v = n;
    while (v != 1 && w.odd.size() < max_steps) {
        if (boost::multiprecision::bit_test(v, 0)) {
            w.odd.push_back(1);
            v = 3 * v + 1;
        } else {
            w.odd.push_back(0);
            v >>= 1;
        }
    }
    w.reached_one = (v == 1);
    return w;
}

}  // namespace

RSequence RSequence::from_exponents(std::vector<std::uint64_t> exponents) {
    if (exponents.size() < 2) {
        throw SequenceError(SequenceErrorKind::TooShort,
                            "sequence needs at least two exponents");
    }
    for (std::size_t i = 0; i + 1 < exponents.size(); ++i) {
        if (exponents[i] > exponents[i + 1]) {
            throw SequenceError(SequenceErrorKind::NotMonotone,
                                "exponents must be nondecreasing");
        }
    }
    return RSequence(std::move(exponents));
}

Nat decode(const RSequence& s) {
    const auto exps = s.exponents();
    const std::size_t k = s.order();

    Nat sum = 0;
    Nat p3 = 1;  // 3^{k-i}, rising as i descends
    Nat term;
    for (std::size_t i = k + 1; i-- > 0;) {
        term = p3;
        term <<= exps[i];
        sum += term;
        p3 *= 3;
    }
    // p3 is now 3^{k+1}
    Nat numerator = Nat(1) << exps[k + 1];
    numerator -= sum;
    if (numerator <= 0) {
        throw SequenceError(SequenceErrorKind::NonPositive,
                            "numerator of the representation is not positive");
    }
    Nat q, r;
    boost::multiprecision::divide_qr(numerator, p3, q, r);
    if (r != 0) {
        throw SequenceError(SequenceErrorKind::NotDivisible,
                            "3^{k+1} does not divide the numerator");
    }
    return q;
}

RSequence double_transform(const RSequence& s) {
    std::vector<std::uint64_t> exps(s.exponents().begin(), s.exponents().end());
    bump_all(exps);
    return RSequence::from_exponents(std::move(exps));
}

RSequence odd_inverse_transform(const RSequence& s) {
    const Nat m = decode(s);
    if (m % 3 != 2) {
        throw SequenceError(SequenceErrorKind::NotApplicable,
                            "odd-inverse needs decode(s) congruent to 2 mod 3");
    }
    std::vector<std::uint64_t> exps(s.exponents().begin(), s.exponents().end());
    bump_all(exps);
    exps.insert(exps.begin(), 0);
    return RSequence::from_exponents(std::move(exps));
}

std::optional<EncodeResult> encode(const Nat& n, std::uint64_t max_steps) {
    if (n == 0) throw DomainError("encode: input must be >= 1");
    if (n == 1) {
        return EncodeResult{RSequence::from_exponents({0, 2}), false};
    }

    const ParityWalk walk = parity_walk(n, max_steps);
    if (!walk.reached_one) return std::nullopt;
    const auto& odd = walk.odd;
    const std::uint64_t total = odd.size();

    // Index of the last odd step; none means n is a pure power of two.
    std::uint64_t last_odd = total;
    for (std::uint64_t i = total; i-- > 0;) {
        if (odd[i]) {
            last_odd = i;
            break;
        }
    }
    if (last_odd == total) {
        return EncodeResult{RSequence::from_exponents({total, total + 2}), true};
    }

    // Seed (0, c) stands for the value after the first reverse odd-inverse,
    // where c counts the trailing halvings 2^c -> ... -> 1.
    const std::uint64_t c = total - last_odd - 1;
    std::vector<std::uint64_t> exps{0, c};

    // Replay the remaining reverse steps. A reverse odd-inverse always
    // follows a reverse doubling (3v+1 is even), and the pair is one
    // odd-inverse transform; a lone doubling is one double transform.
    std::uint64_t j = last_odd;
    while (j > 0) {
        assert(!odd[j - 1]);
        if (j >= 2 && odd[j - 2]) {
            bump_all(exps);
            exps.insert(exps.begin(), 0);
            j -= 2;
        } else {
            bump_all(exps);
            j -= 1;
        }
    }
    return EncodeResult{RSequence::from_exponents(std::move(exps)), false};
}

RSequence validate(std::span<const std::int64_t> raw) {
    if (raw.size() < 2) {
        throw SequenceError(SequenceErrorKind::TooShort,
                            "sequence needs at least two exponents");
    }
    std::int64_t prev = 0;  // implicit 0 <= a_0
    for (const auto v : raw) {
        if (v < prev) {
            throw SequenceError(SequenceErrorKind::NotMonotone,
                                "exponents must satisfy 0 <= a_0 <= ... <= a_{k+1}");
        }
        prev = v;
    }
    std::vector<std::uint64_t> exps(raw.begin(), raw.end());
    RSequence s = RSequence::from_exponents(std::move(exps));
    decode(s);  // NotDivisible / NonPositive surface from here
    return s;
}

std::vector<std::int64_t> parse_sequence_text(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos
                                                 : comma - pos);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
            token.remove_prefix(1);
        }
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) {
            token.remove_suffix(1);
        }
        if (token.empty()) {
            throw DomainError("sequence: empty exponent token");
        }
        std::string_view digits = token;
        bool negative = false;
        if (digits.front() == '-') {
            negative = true;
            digits.remove_prefix(1);
        }
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string_view::npos) {
            throw DomainError("sequence: exponent is not a decimal integer: '" +
                              std::string(token) + "'");
        }
        if (digits.size() > 1 && digits.front() == '0') {
            throw DomainError("sequence: leading zeros rejected: '" +
                              std::string(token) + "'");
        }
        std::int64_t value = 0;
        const auto res =
            std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (res.ec != std::errc() || res.ptr != digits.data() + digits.size()) {
            throw DomainError("sequence: exponent out of range: '" +
                              std::string(token) + "'");
        }
        out.push_back(negative ? -value : value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string sequence_to_text(const RSequence& s) {
    std::string out;
    bool first = true;
    for (const auto e : s.exponents()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out;
}

const char* to_string(SequenceErrorKind kind) noexcept {
    switch (kind) {
        case SequenceErrorKind::TooShort: return "TooShort";
        case SequenceErrorKind::NotMonotone: return "NotMonotone";
        case SequenceErrorKind::NotDivisible: return "NotDivisible";
        case SequenceErrorKind::NonPositive: return "NonPositive";
        case SequenceErrorKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

}  // namespace collatz
