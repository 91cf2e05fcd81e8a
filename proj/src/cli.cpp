#include "collatz/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "collatz/coalescence.hpp"
#include "collatz/lemmas.hpp"
#include "collatz/representation.hpp"
#include "collatz/trajectory.hpp"

namespace collatz::cli {

namespace {

using nlohmann::ordered_json;

// Exponents above this would make the CLI allocate multi-gigabyte
// numbers; the library itself is not capped.
constexpr std::int64_t kMaxCliExponent = std::int64_t(1) << 24;

Nat parse_nat(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw DomainError("expected a nonnegative decimal integer, got '" + text +
                          "'");
    }
    if (text.size() > 1 && text.front() == '0') {
        throw DomainError("leading zeros rejected: '" + text + "'");
    }
    return Nat(text);
}

std::uint64_t parse_count(const std::string& text) {
    const Nat n = parse_nat(text);
    if (n > std::numeric_limits<std::uint64_t>::max()) {
        throw DomainError("count out of range: '" + text + "'");
    }
    return n.convert_to<std::uint64_t>();
}

std::vector<std::int64_t> parse_cli_sequence(const std::string& text) {
    auto raw = parse_sequence_text(text);
    for (const auto e : raw) {
        if (e > kMaxCliExponent) {
            throw DomainError("exponent " + std::to_string(e) +
                              " exceeds the CLI cap of " +
                              std::to_string(kMaxCliExponent));
        }
    }
    return raw;
}

ordered_json sequence_json(const RSequence& s) {
    auto arr = ordered_json::array();
    for (const auto e : s.exponents()) arr.push_back(e);
    return arr;
}

std::string csv_quote(const std::string& field) {
    return '"' + field + '"';
}

struct Options {
    std::uint64_t max_steps = 100000;
    std::string format = "text";
    unsigned jobs = 0;  // 0: one per hardware thread
    std::string output;
};

// Payload plus exit code of one executed subcommand.
struct Outcome {
    std::string payload;
    int code = 0;
};

Outcome do_step(const Nat& n, const Options& opt) {
    const Nat v = collatz_step(n);
    if (opt.format == "json") {
        ordered_json j;
        j["n"] = n.str();
        j["result"] = v.str();
        return {j.dump(2) + "\n", 0};
    }
    if (opt.format == "csv") {
        return {"n,result\n" + n.str() + ',' + v.str() + '\n', 0};
    }
    return {v.str() + "\n", 0};
}

Outcome do_traj(const Nat& n, const Options& opt) {
    const Trajectory t = trajectory(n, opt.max_steps);
    const int code = t.status == TrajectoryStatus::ReachedOne ? 0 : 1;
    if (opt.format == "json") {
        ordered_json j;
        j["start"] = t.start.str();
        auto vals = ordered_json::array();
        for (const auto& v : t.values) vals.push_back(v.str());
        j["values"] = std::move(vals);
        j["status"] = to_string(t.status);
        return {j.dump(2) + "\n", code};
    }
    if (opt.format == "csv") {
        std::string out = "index,value\n";
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            out += std::to_string(i) + ',' + t.values[i].str() + '\n';
        }
        return {out, code};
    }
    std::string out;
    for (const auto& v : t.values) {
        out += v.str();
        out += '\n';
    }
    return {out, code};
}

Outcome do_stop_steps(const Nat& n, const Options& opt) {
    const auto steps = total_stopping_steps(n, opt.max_steps);
    if (opt.format == "json") {
        ordered_json j;
        j["n"] = n.str();
        if (steps) {
            j["steps"] = *steps;
        } else {
            j["steps"] = nullptr;
        }
        return {j.dump(2) + "\n", steps ? 0 : 1};
    }
    if (opt.format == "csv") {
        return {"n,steps\n" + n.str() + ',' +
                    (steps ? std::to_string(*steps) : std::string()) + '\n',
                steps ? 0 : 1};
    }
    if (steps) return {std::to_string(*steps) + "\n", 0};
    return {"budget-exhausted\n", 1};
}

Outcome do_encode(const Nat& n, const Options& opt) {
    const auto enc = encode(n, opt.max_steps);
    if (!enc) {
        return {"budget-exhausted: trajectory of " + n.str() +
                    " did not reach 1 within " + std::to_string(opt.max_steps) +
                    " steps\n",
                1};
    }
    if (opt.format == "json") {
        ordered_json j;
        j["sequence"] = sequence_json(enc->sequence);
        j["power_of_two_input"] = enc->power_of_two_input;
        return {j.dump(2) + "\n", 0};
    }
    if (opt.format == "csv") {
        return {"sequence,power_of_two_input\n" +
                    csv_quote(sequence_to_text(enc->sequence)) + ',' +
                    (enc->power_of_two_input ? "true" : "false") + '\n',
                0};
    }
    return {sequence_to_text(enc->sequence) + "\n", 0};
}

Outcome do_decode(const std::string& seq_text, const Options& opt) {
    const RSequence s = validate(parse_cli_sequence(seq_text));
    const Nat v = decode(s);
    if (opt.format == "json") {
        ordered_json j;
        j["sequence"] = sequence_json(s);
        j["value"] = v.str();
        return {j.dump(2) + "\n", 0};
    }
    if (opt.format == "csv") {
        return {"sequence,value\n" + csv_quote(sequence_to_text(s)) + ',' +
                    v.str() + '\n',
                0};
    }
    return {v.str() + "\n", 0};
}

Outcome do_validate(const std::string& seq_text, const Options& opt) {
    const RSequence s = validate(parse_cli_sequence(seq_text));
    if (opt.format == "json") {
        ordered_json j;
        j["valid"] = true;
        j["sequence"] = sequence_json(s);
        return {j.dump(2) + "\n", 0};
    }
    if (opt.format == "csv") {
        return {"valid,sequence\ntrue," + csv_quote(sequence_to_text(s)) + '\n',
                0};
    }
    return {"valid\n", 0};
}

Outcome do_transform(const std::string& seq_text, bool odd_inverse,
                     const Options& opt) {
    const RSequence s = validate(parse_cli_sequence(seq_text));
    const RSequence r = odd_inverse ? odd_inverse_transform(s) : double_transform(s);
    if (opt.format == "json") {
        ordered_json j;
        j["sequence"] = sequence_json(r);
        return {j.dump(2) + "\n", 0};
    }
    if (opt.format == "csv") {
        return {"sequence\n" + csv_quote(sequence_to_text(r)) + '\n', 0};
    }
    return {sequence_to_text(r) + "\n", 0};
}

Outcome coalescence_outcome(const CoalescenceResult& r, const Options& opt) {
    const int code = r.met ? 0 : 1;
    if (opt.format == "json") {
        ordered_json j;
        j["met"] = r.met;
        if (r.met) {
            j["meet_value"] = r.meet_value.str();
        } else {
            j["meet_value"] = nullptr;
        }
        j["index_left"] = r.index_left;
        j["index_right"] = r.index_right;
        j["budget_hit"] = r.budget_hit;
        return {j.dump(2) + "\n", code};
    }
    if (opt.format == "csv") {
        return {"met,meet_value,index_left,index_right,budget_hit\n" +
                    std::string(r.met ? "true" : "false") + ',' +
                    (r.met ? r.meet_value.str() : std::string()) + ',' +
                    std::to_string(r.index_left) + ',' +
                    std::to_string(r.index_right) + ',' +
                    (r.budget_hit ? "true" : "false") + '\n',
                code};
    }
    if (r.met) {
        return {"met at " + r.meet_value.str() + " (index_left " +
                    std::to_string(r.index_left) + ", index_right " +
                    std::to_string(r.index_right) + ")\n",
                0};
    }
    return {std::string("no meet within budget") +
                (r.budget_hit ? " (budget hit)" : "") + "\n",
            1};
}

Outcome report_outcome(const SweepReport& report, const Options& opt) {
    const int code = report.failures.empty() ? 0 : 1;
    if (opt.format == "json") return {to_json(report) + "\n", code};
    if (opt.format == "csv") return {to_csv(report), code};
    return {to_text(report), code};
}

Outcome do_lemma2(std::uint64_t a, const Options& opt) {
    const bool holds = lemma2_check(a);
    if (opt.format == "json") {
        ordered_json j;
        j["a"] = a;
        j["holds"] = holds;
        return {j.dump(2) + "\n", holds ? 0 : 1};
    }
    if (opt.format == "csv") {
        return {"a,holds\n" + std::to_string(a) + ',' + (holds ? "true" : "false") +
                    '\n',
                holds ? 0 : 1};
    }
    return {std::string(holds ? "holds" : "fails") + "\n", holds ? 0 : 1};
}

Outcome lemma3_outcome(const Lemma3Outcome& o, const Options& opt) {
    const int code = o.k_found ? 0 : 1;
    if (opt.format == "json") return {to_json(o) + "\n", code};
    if (opt.format == "csv") {
        return {to_csv(std::span<const Lemma3Outcome>(&o, 1)), code};
    }
    std::ostringstream os;
    os << "n " << o.n << ": epsilon " << o.epsilon << ", odd_part " << o.odd_part
       << ", target " << o.target << ", ";
    if (o.k_found) {
        os << "k_found " << *o.k_found;
    } else {
        os << "target not reached";
    }
    os << ", k_predicted " << o.k_predicted << "\n";
    return {os.str(), code};
}

Outcome do_audit(std::uint64_t a_max, const Options& opt) {
    const auto rows = case3_inequality_audit(a_max);
    int code = 0;
    for (const auto& r : rows) {
        if (r.a >= 8 && (!r.lemma2_holds || !r.floor_bound_holds)) code = 1;
    }
    if (opt.format == "json") {
        return {to_json(std::span<const Case3Row>(rows)) + "\n", code};
    }
    if (opt.format == "csv") return {to_csv(std::span<const Case3Row>(rows)), code};
    std::string out;
    for (const auto& r : rows) {
        out += "a " + std::to_string(r.a) + ": lemma2 " +
               (r.lemma2_holds ? "holds" : "fails") + ", floor bound " +
               (r.floor_bound_holds ? "holds" : "fails") + "\n";
    }
    return {out, code};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact 3x+1 trajectory, representation and verification tool"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--max-steps", opt.max_steps,
                   "step budget for orbit computations (default 100000)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--jobs", opt.jobs,
                   "worker threads for sweeps (default: hardware threads)");
    app.add_option("--output", opt.output, "write output to this file");

    std::string arg_n, arg_m, arg_seq, arg_a, arg_b;

    auto* step = app.add_subcommand("step", "one application of the map");
    step->add_option("n", arg_n)->required();
    auto* traj = app.add_subcommand("traj", "orbit prefix until 1 or budget");
    traj->add_option("n", arg_n)->required();
    auto* stop = app.add_subcommand("stop-steps", "least k with T^k(n) = 1");
    stop->add_option("n", arg_n)->required();
    auto* enc = app.add_subcommand("encode", "canonical exponent sequence of n");
    enc->add_option("n", arg_n)->required();
    auto* dec = app.add_subcommand("decode", "integer value of a sequence");
    dec->add_option("sequence", arg_seq)->required();
    auto* val = app.add_subcommand("validate", "check a sequence");
    val->add_option("sequence", arg_seq)->required();
    auto* dbl = app.add_subcommand("double", "doubling transform");
    dbl->add_option("sequence", arg_seq)->required();
    auto* oinv = app.add_subcommand("odd-inverse", "odd-inverse transform");
    oinv->add_option("sequence", arg_seq)->required();
    auto* coal = app.add_subcommand("coalesce", "first common orbit value");
    coal->add_option("n1", arg_n)->required();
    coal->add_option("n2", arg_m)->required();
    auto* hyp = app.add_subcommand("hypothesis", "check n ~ 3n+2");
    hyp->add_option("n", arg_n)->required();
    auto* hyp_sweep =
        app.add_subcommand("sweep-hypothesis", "check n ~ 3n+2 over a range");
    hyp_sweep->add_option("start", arg_a)->required();
    hyp_sweep->add_option("end", arg_b)->required();
    auto* lem2 = app.add_subcommand("lemma2", "exact power inequality check");
    lem2->add_option("a", arg_a)->required();
    auto* lem3 =
        app.add_subcommand("lemma3", "iterate-of-successor formula for even n");
    lem3->add_option("n", arg_n)->required();
    auto* lem4 = app.add_subcommand("lemma4", "lemma3 specialized to n = 2^a");
    lem4->add_option("a", arg_a)->required();
    auto* th_sweep = app.add_subcommand("sweep-theorem1",
                                        "encode + round-trip over a range");
    th_sweep->add_option("start", arg_a)->required();
    th_sweep->add_option("end", arg_b)->required();
    auto* audit =
        app.add_subcommand("audit-case3", "boundary audit of the a >= 8 claims");
    audit->add_option("a_max", arg_a)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    try {
        Outcome outcome;
        if (step->parsed()) {
            outcome = do_step(parse_nat(arg_n), opt);
        } else if (traj->parsed()) {
            outcome = do_traj(parse_nat(arg_n), opt);
        } else if (stop->parsed()) {
            outcome = do_stop_steps(parse_nat(arg_n), opt);
        } else if (enc->parsed()) {
            outcome = do_encode(parse_nat(arg_n), opt);
        } else if (dec->parsed()) {
            outcome = do_decode(arg_seq, opt);
        } else if (val->parsed()) {
            outcome = do_validate(arg_seq, opt);
        } else if (dbl->parsed()) {
            outcome = do_transform(arg_seq, false, opt);
        } else if (oinv->parsed()) {
            outcome = do_transform(arg_seq, true, opt);
        } else if (coal->parsed()) {
            outcome = coalescence_outcome(
                coalesce(parse_nat(arg_n), parse_nat(arg_m), opt.max_steps), opt);
        } else if (hyp->parsed()) {
            outcome = coalescence_outcome(
                hypothesis_check(parse_nat(arg_n), opt.max_steps), opt);
        } else if (hyp_sweep->parsed()) {
            outcome = report_outcome(
                hypothesis_sweep(parse_nat(arg_a), parse_nat(arg_b),
                                 opt.max_steps, opt.jobs),
                opt);
        } else if (lem2->parsed()) {
            outcome = do_lemma2(parse_count(arg_a), opt);
        } else if (lem3->parsed()) {
            outcome = lemma3_outcome(lemma3_check(parse_nat(arg_n), opt.max_steps),
                                     opt);
        } else if (lem4->parsed()) {
            outcome = lemma3_outcome(lemma4_check(parse_count(arg_a), opt.max_steps),
                                     opt);
        } else if (th_sweep->parsed()) {
            const auto sweep = theorem1_sweep(parse_nat(arg_a), parse_nat(arg_b),
                                              opt.max_steps, opt.jobs);
            outcome = report_outcome(sweep.report, opt);
        } else if (audit->parsed()) {
            outcome = do_audit(parse_count(arg_a), opt);
        } else {
            err << "no subcommand\n";
            return 2;
        }

        if (!opt.output.empty()) {
            std::ofstream file(opt.output);
            if (!file) {
                err << "cannot open output file: " << opt.output << "\n";
                return 2;
            }
            file << outcome.payload;
        } else {
            out << outcome.payload;
        }
        return outcome.code;
    } catch (const SequenceError& e) {
        err << "sequence error (" << to_string(e.kind()) << "): " << e.what()
            << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace collatz::cli
