#include "collatz/lemmas.hpp"

#include <chrono>

#include <json.hpp>

#include "collatz/representation.hpp"
#include "descent.hpp"
#include "parallel.hpp"

namespace collatz {

bool lemma2_check(std::uint64_t a) {
    const Nat lhs = pow3(a + 2);
    Nat rhs = (Nat(1) << a) - 1;
    rhs *= rhs;
    return lhs < rhs;
}

Lemma3Outcome lemma3_check(const Nat& n, std::uint64_t k_max) {
    const FactoredEven f = nu2(n);  // rejects odd and zero

    Lemma3Outcome out;
    out.n = n;
    out.epsilon = f.epsilon;
    out.odd_part = f.odd_part;
    if (f.epsilon % 2 == 0) {
        out.target = pow3(f.epsilon / 2) * f.odd_part + 1;
        out.k_predicted = 3 * (f.epsilon / 2);
    } else {
        out.target = pow3(f.epsilon / 2 + 1) * f.odd_part + 2;
        out.k_predicted = 3 * ((f.epsilon - 1) / 2) + 2;
    }

    Nat v = n + 1;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        if (v == out.target) {
            out.k_found = k;
            return out;
        }
        v = boost::multiprecision::bit_test(v, 0) ? Nat(3 * v + 1) : Nat(v >> 1);
    }
    return out;  // k_found empty: not found within k_max
}

Lemma3Outcome lemma4_check(std::uint64_t a, std::uint64_t k_max) {
    if (a == 0) throw DomainError("lemma4_check: a must be >= 1");
    return lemma3_check(Nat(1) << a, k_max);
}

Theorem1Sweep theorem1_sweep(const Nat& range_start, const Nat& range_end,
                             std::uint64_t max_steps, unsigned workers) {
    if (range_start < 1 || range_start > range_end) {
        throw DomainError("theorem1_sweep: need 1 <= range_start <= range_end");
    }
    const auto t0 = std::chrono::steady_clock::now();

    const Nat total_nat = range_end - range_start + 1;
    if (total_nat > Nat(std::uint64_t(1) << 62)) {
        throw DomainError("theorem1_sweep: range too large to shard");
    }
    const std::uint64_t total = total_nat.convert_to<std::uint64_t>();

    std::optional<detail::DescentMemo> memo;
    constexpr std::uint64_t kMemoCap = std::uint64_t(1) << 23;
    if (total >= 256) {
        const Nat want = range_end + 1;
        const std::uint64_t limit =
            want > kMemoCap ? kMemoCap : want.convert_to<std::uint64_t>();
        memo.emplace(limit);
    }
    const detail::DescentMemo* memo_ptr = memo ? &*memo : nullptr;

    struct Partial {
        std::vector<TheoremSweepRecord> records;
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
            p.records.reserve(hi - lo);
            for (std::uint64_t off = lo; off < hi; ++off) {
                const Nat n = range_start + off;
                TheoremSweepRecord rec;
                rec.n = n;
                rec.power_of_two = is_power_of_two(n);
                if (const auto enc = encode(n, max_steps)) {
                    // the conclusion is certified by the round trip
                    if (decode(enc->sequence) == n) {
                        rec.encoded = true;
                        rec.sequence_length = enc->sequence.size();
                    }
                }
                if (!rec.encoded) p.failures.push_back(n);
                p.records.push_back(std::move(rec));

                const auto st = detail::orbit_stats(n, max_steps, memo_ptr);
                if (st.peak > p.max_orbit_value) p.max_orbit_value = st.peak;
                p.max_steps_seen = std::max(p.max_steps_seen, st.steps);
            }
        });

    Theorem1Sweep sweep;
    sweep.records.reserve(total);
    sweep.report.range_start = range_start;
    sweep.report.range_end = range_end;
    for (auto& p : partials) {
        for (auto& r : p.records) sweep.records.push_back(std::move(r));
        for (auto& f : p.failures) sweep.report.failures.push_back(std::move(f));
        if (p.max_orbit_value > sweep.report.max_orbit_value) {
            sweep.report.max_orbit_value = p.max_orbit_value;
        }
        sweep.report.max_steps_seen =
            std::max(sweep.report.max_steps_seen, p.max_steps_seen);
    }
    sweep.report.checked = total;
    sweep.report.succeeded = total - sweep.report.failures.size();
    sweep.report.elapsed = std::chrono::steady_clock::now() - t0;
    return sweep;
}

std::vector<Case3Row> case3_inequality_audit(std::uint64_t a_max) {
    if (a_max < 8) throw DomainError("case3_inequality_audit: a_max must be >= 8");
    std::vector<Case3Row> rows;
    rows.reserve(a_max);
    for (std::uint64_t a = 1; a <= a_max; ++a) {
        Case3Row row;
        row.a = a;
        row.lemma2_holds = lemma2_check(a);
        row.floor_bound_holds = pow3(a / 2 + 1) + 2 < (Nat(1) << a) + 1;
        rows.push_back(row);
    }
    return rows;
}

namespace {

nlohmann::ordered_json outcome_json(const Lemma3Outcome& o) {
    nlohmann::ordered_json j;
    j["n"] = o.n.str();
    j["epsilon"] = o.epsilon;
    j["odd_part"] = o.odd_part.str();
    j["target"] = o.target.str();
    if (o.k_found) {
        j["k_found"] = *o.k_found;
    } else {
        j["k_found"] = nullptr;
    }
    j["k_predicted"] = o.k_predicted;
    return j;
}

}  // namespace

std::string to_json(const Lemma3Outcome& outcome) {
    return outcome_json(outcome).dump(2);
}

std::string to_csv(std::span<const Lemma3Outcome> outcomes) {
    std::string out = "n,epsilon,odd_part,target,k_found,k_predicted\n";
    for (const auto& o : outcomes) {
        out += o.n.str() + ',' + std::to_string(o.epsilon) + ',' +
               o.odd_part.str() + ',' + o.target.str() + ',' +
               (o.k_found ? std::to_string(*o.k_found) : std::string()) + ',' +
               std::to_string(o.k_predicted) + '\n';
    }
    return out;
}

std::string to_json(std::span<const TheoremSweepRecord> records) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["n"] = r.n.str();
        j["encoded"] = r.encoded;
        j["power_of_two"] = r.power_of_two;
        j["sequence_length"] = r.sequence_length;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string to_csv(std::span<const TheoremSweepRecord> records) {
    std::string out = "n,encoded,power_of_two,sequence_length\n";
    for (const auto& r : records) {
        out += r.n.str() + ',' + (r.encoded ? "true" : "false") + ',' +
               (r.power_of_two ? "true" : "false") + ',' +
               std::to_string(r.sequence_length) + '\n';
    }
    return out;
}

std::string to_json(std::span<const Case3Row> rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["a"] = r.a;
        j["lemma2_holds"] = r.lemma2_holds;
        j["floor_bound_holds"] = r.floor_bound_holds;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string to_csv(std::span<const Case3Row> rows) {
    std::string out = "a,lemma2_holds,floor_bound_holds\n";
    for (const auto& r : rows) {
        out += std::to_string(r.a) + ',' + (r.lemma2_holds ? "true" : "false") +
               ',' + (r.floor_bound_holds ? "true" : "false") + '\n';
    }
    return out;
}

}  // namespace collatz
