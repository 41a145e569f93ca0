// Command-line front end: enumeration, counting, verification and weighing
// plans, with human-readable tables or machine-readable JSON envelopes.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bachet/count.hpp"
#include "bachet/enumerate.hpp"
#include "bachet/macmahon.hpp"
#include "bachet/partition.hpp"
#include "bachet/weighing.hpp"

namespace {

using bachet::Int;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr std::size_t kMaxTargets = 1'000'000;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text) {
    try {
        return Int(text, 10);  // fixed base: no accidental octal/hex
    } catch (const std::invalid_argument&) {
        throw UsageError("not an integer: '" + text + "'");
    }
}

Int parse_positive(const std::string& text, const char* what) {
    const Int v = parse_int(text);
    if (v <= 0) throw UsageError(std::string(what) + " must be positive");
    return v;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
        out.push_back(parse_int(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "a..b" (inclusive), a comma list, or a single value.
std::vector<Int> parse_targets(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) return parse_int_list(text);
    const Int a = parse_int(text.substr(0, dots));
    const Int b = parse_int(text.substr(dots + 2));
    if (b < a) throw UsageError("empty range '" + text + "'");
    if (b - a >= Int(static_cast<unsigned long>(kMaxTargets))) throw UsageError("range too large");
    std::vector<Int> out;
    for (Int v = a; v <= b; ++v) out.push_back(v);
    return out;
}

std::string resolve_format(const std::string& flag_value) {
    std::string fmt = flag_value;
    if (fmt.empty()) {
        const char* env = std::getenv("BACHET_FORMAT");
        fmt = (env && *env) ? env : "table";
    }
    if (fmt != "json" && fmt != "table")
        throw UsageError("unknown format '" + fmt + "' (expected json or table)");
    return fmt;
}

long long to_int64(const Int& v) {
    if (!v.fits_slong_p()) throw UsageError("value too large for this output field");
    return static_cast<long long>(v.get_si());
}

json json_parts(const std::vector<Int>& parts) {
    json arr = json::array();
    for (const Int& p : parts) arr.push_back(to_int64(p));
    return arr;
}

json json_partition(const bachet::Partition& p) { return json_parts(p.parts()); }

json json_multiplicity(const bachet::MultiplicityPartition& p) {
    json entries = json::array();
    for (const auto& [value, mult] : p.entries())
        entries.push_back(json::array({to_int64(value), static_cast<long long>(mult)}));
    return entries;
}

void print_envelope(const std::string& command, json parameters, json result) {
    json env;
    env["command"] = command;
    env["parameters"] = std::move(parameters);
    env["result"] = std::move(result);
    env["version"] = kVersion;
    std::cout << env.dump() << "\n";
}

// --- subcommand payloads -------------------------------------------------

struct EnumerateArgs {
    std::string m, format;
    unsigned long e = 0, r = 2;
};

int run_enumerate(const EnumerateArgs& args) {
    const Int m = parse_positive(args.m, "--m");
    const bachet::ErParams params(args.e, args.r);
    const bachet::EnumerationResult res = (params == bachet::ErParams::two_pan())
                                              ? bachet::enumerate_bachet(m)
                                              : bachet::enumerate_er(m, params);
    if (resolve_format(args.format) == "json") {
        json result;
        result["count"] = Int(static_cast<unsigned long>(res.count())).get_str();
        json list = json::array();
        for (const bachet::Partition& p : res.partitions) list.push_back(json_partition(p));
        result["partitions"] = std::move(list);
        print_envelope("enumerate",
                       json{{"m", to_int64(m)}, {"e", args.e}, {"r", args.r}},
                       std::move(result));
    } else {
        for (const bachet::Partition& p : res.partitions) std::cout << p.to_string() << "\n";
        std::cout << "count: " << res.count() << "\n";
    }
    return kOk;
}

struct CountArgs {
    std::string m, method = "formula", format;
};

int run_count(const CountArgs& args) {
    if (args.method != "formula" && args.method != "enumerate" && args.method != "both")
        throw UsageError("unknown method '" + args.method + "'");
    const std::vector<Int> ms = parse_targets(args.m);
    for (const Int& m : ms)
        if (m <= 0) throw UsageError("--m must be positive");

    struct Row {
        Int m, count;
    };
    std::vector<Row> rows;
    bool mismatch = false;
    Int bad_m = 0;
    for (const Int& m : ms) {
        Int value;
        if (args.method == "formula") {
            value = bachet::count_bachet(m);
        } else if (args.method == "enumerate") {
            value = Int(static_cast<unsigned long>(bachet::enumerate_bachet(m).count()));
        } else {
            const Int formula = bachet::count_bachet(m);
            const Int listed(static_cast<unsigned long>(bachet::enumerate_bachet(m).count()));
            if (formula != listed && !mismatch) {
                mismatch = true;
                bad_m = m;
            }
            value = formula;
        }
        rows.push_back({m, value});
    }

    if (resolve_format(args.format) == "json") {
        json result;
        result["method"] = args.method;
        if (rows.size() == 1) {
            result["m"] = to_int64(rows[0].m);
            result["count"] = rows[0].count.get_str();
        } else {
            json list = json::array();
            for (const Row& row : rows)
                list.push_back(json{{"m", to_int64(row.m)}, {"count", row.count.get_str()}});
            result["counts"] = std::move(list);
        }
        if (args.method == "both") result["consistent"] = !mismatch;
        print_envelope("count", json{{"m", args.m}, {"method", args.method}}, std::move(result));
    } else {
        if (rows.size() == 1) {
            std::cout << rows[0].count.get_str() << "\n";
        } else {
            for (const Row& row : rows)
                std::cout << row.m.get_str() << " " << row.count.get_str() << "\n";
        }
    }
    if (mismatch) {
        std::cerr << "error: formula and enumeration disagree at m = " << bad_m.get_str() << "\n";
        return kVerificationFailed;
    }
    return kOk;
}

struct VerifyArgs {
    std::string m, parts, format;
    unsigned long e = 0, r = 2;
};

int run_verify(const VerifyArgs& args) {
    const Int m = parse_positive(args.m, "--m");
    const std::vector<Int> raw = parse_int_list(args.parts);
    for (const Int& p : raw)
        if (p <= 0) throw UsageError("parts must be positive");
    if (!std::is_sorted(raw.begin(), raw.end()))
        std::cerr << "note: parts reordered nondecreasing (a partition is a multiset)\n";
    const bachet::Partition p(raw);
    const bachet::ErParams params(args.e, args.r);

    std::string reason;
    std::size_t minimal_parts = 0;
    if (p.sum() != m) {
        reason = "wrong sum";
    } else if (!bachet::is_er_complete(p, params)) {
        reason = "fails completeness";
    } else {
        const bachet::EnumerationResult minimal = bachet::enumerate_er(m, params);
        minimal_parts = minimal.partitions.front().size();
        if (p.size() != minimal_parts) reason = "not minimal";
    }
    const bool verified = reason.empty();

    if (resolve_format(args.format) == "json") {
        json result;
        result["verified"] = verified;
        if (!verified) result["reason"] = reason;
        if (minimal_parts != 0) result["minimal_parts"] = minimal_parts;
        print_envelope("verify",
                       json{{"m", to_int64(m)},
                            {"parts", json_partition(p)},
                            {"e", args.e},
                            {"r", args.r}},
                       std::move(result));
    } else {
        if (verified)
            std::cout << "verified: " << p.to_string() << " is a minimal (" << args.e << ","
                      << args.r << ")-complete partition of " << m.get_str() << "\n";
        else
            std::cout << "not verified: " << reason << "\n";
    }
    return verified ? kOk : kVerificationFailed;
}

struct AryArgs {
    std::string k, format;
    unsigned long base = 3;
};

int run_ary(const std::string& command, const AryArgs& args) {
    if (args.base < 2) throw UsageError("--base must be at least 2");
    const Int k = parse_int(args.k);
    const Int value = bachet::ary_count(args.base, k);
    if (resolve_format(args.format) == "json") {
        print_envelope(command, json{{"base", args.base}, {"k", to_int64(k)}},
                       json{{"value", value.get_str()}});
    } else {
        std::cout << value.get_str() << "\n";
    }
    return kOk;
}

struct FactorizationsArgs {
    std::string n, format;
};

int run_factorizations(const FactorizationsArgs& args) {
    const Int n = parse_int(args.n);
    if (n < 2) throw UsageError("--n must be at least 2");
    const auto factorizations = bachet::ordered_factorizations(n);
    if (resolve_format(args.format) == "json") {
        json list = json::array();
        for (const auto& f : factorizations) list.push_back(json_parts(f.factors));
        print_envelope("factorizations", json{{"n", to_int64(n)}},
                       json{{"count", Int(static_cast<unsigned long>(factorizations.size())).get_str()},
                            {"factorizations", std::move(list)}});
    } else {
        for (const auto& f : factorizations) std::cout << f.to_string() << "\n";
        std::cout << "count: " << factorizations.size() << "\n";
    }
    return kOk;
}

struct MacMahonArgs {
    std::string m, format;
};

int run_macmahon(const std::string& command, const MacMahonArgs& args) {
    const bool perfect = command == "perfect";
    const Int m = parse_positive(args.m, "--m");
    const Int n = perfect ? Int(m + 1) : Int(2 * m + 1);
    const auto factorizations = bachet::ordered_factorizations(n);
    std::vector<bachet::MultiplicityPartition> partitions;
    partitions.reserve(factorizations.size());
    for (const auto& f : factorizations)
        partitions.push_back(perfect ? bachet::perfect_from_factorization(f)
                                     : bachet::subperfect_from_factorization(f));

    if (resolve_format(args.format) == "json") {
        json list = json::array();
        for (std::size_t i = 0; i < partitions.size(); ++i)
            list.push_back(json{{"entries", json_multiplicity(partitions[i])},
                                {"factorization", json_parts(factorizations[i].factors)}});
        print_envelope(command, json{{"m", to_int64(m)}},
                       json{{"count", Int(static_cast<unsigned long>(partitions.size())).get_str()},
                            {"partitions", std::move(list)}});
    } else {
        for (std::size_t i = 0; i < partitions.size(); ++i)
            std::cout << partitions[i].to_string() << "  <-  " << factorizations[i].to_string()
                      << "\n";
        std::cout << "count: " << partitions.size() << "\n";
    }
    return kOk;
}

struct PlanArgs {
    std::string m, weights, targets, mode = "two-pan", format;
    unsigned long r = 2;
};

int run_plan(const PlanArgs& args) {
    if (args.m.empty() == args.weights.empty())
        throw UsageError("give exactly one of --m or --weights");

    std::optional<bachet::Partition> weights;
    if (!args.m.empty()) {
        weights = bachet::canonical_w(parse_positive(args.m, "--m"));
    } else {
        const std::vector<Int> list = parse_int_list(args.weights);
        for (const Int& w : list)
            if (w <= 0) throw UsageError("weights must be positive");
        weights.emplace(list);
    }

    bachet::WeighMode mode = bachet::WeighMode::two_pan();
    if (args.mode == "two-pan")
        mode = bachet::WeighMode::two_pan();
    else if (args.mode == "one-pan")
        mode = bachet::WeighMode::one_pan();
    else if (args.mode == "r-general")
        mode = bachet::WeighMode::bounded(args.r);
    else
        throw UsageError("unknown mode '" + args.mode + "'");

    std::vector<Int> targets;
    if (!args.targets.empty()) {
        targets = parse_targets(args.targets);
    } else {
        const std::size_t m_total = bachet::to_index(weights->sum());
        if (m_total > kMaxTargets) throw UsageError("default target range too large; give --targets");
        for (std::size_t l = 1; l <= m_total; ++l) targets.emplace_back(static_cast<unsigned long>(l));
    }

    const bachet::WeighingPlan plan = bachet::plan(*weights, mode, targets);

    if (resolve_format(args.format) == "json") {
        json rows = json::array();
        for (const bachet::WeighingRow& row : plan.rows()) {
            json r;
            r["target"] = to_int64(row.target);
            if (row.coefficients) {
                json cs = json::array();
                for (long c : *row.coefficients) cs.push_back(c);
                r["coefficients"] = std::move(cs);
            } else {
                r["coefficients"] = nullptr;
            }
            if (row.negated) r["negated"] = true;
            rows.push_back(std::move(r));
        }
        print_envelope("plan",
                       json{{"weights", json_partition(plan.weights())}, {"mode", mode.name()}},
                       json{{"rows", std::move(rows)},
                            {"unreachable", plan.unreachable_count()}});
    } else {
        std::cout << bachet::render_table(plan);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete partitions, their counts and two-pan weighing plans"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    EnumerateArgs enumerate_args;
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "List minimal complete partitions of m");
    enumerate_cmd->add_option("--m", enumerate_args.m, "target integer")->required();
    enumerate_cmd->add_option("--e", enumerate_args.e, "gap tolerance (default 0)");
    enumerate_cmd->add_option("--r", enumerate_args.r, "coefficient cap (default 2)");
    enumerate_cmd->add_option("--format", enumerate_args.format, "json|table");

    CountArgs count_args;
    CLI::App* count_cmd = app.add_subcommand("count", "Count Bachet partitions of m");
    count_cmd->add_option("--m", count_args.m, "target integer or range a..b")->required();
    count_cmd->add_option("--method", count_args.method, "formula|enumerate|both");
    count_cmd->add_option("--format", count_args.format, "json|table");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Check a partition for minimal completeness");
    verify_cmd->add_option("--m", verify_args.m, "target integer")->required();
    verify_cmd->add_option("--parts", verify_args.parts, "comma-separated parts")->required();
    verify_cmd->add_option("--e", verify_args.e, "gap tolerance (default 0)");
    verify_cmd->add_option("--r", verify_args.r, "coefficient cap (default 2)");
    verify_cmd->add_option("--format", verify_args.format, "json|table");

    AryArgs ternary_args;
    CLI::App* ternary_cmd = app.add_subcommand("ternary", "Partitions of k into powers of 3");
    ternary_cmd->add_option("--k", ternary_args.k, "argument")->required();
    ternary_cmd->add_option("--format", ternary_args.format, "json|table");

    AryArgs ary_args;
    ary_args.base = 2;
    CLI::App* ary_cmd = app.add_subcommand("ary", "Partitions of k into powers of a base");
    ary_cmd->add_option("--base", ary_args.base, "base (default 2)");
    ary_cmd->add_option("--k", ary_args.k, "argument")->required();
    ary_cmd->add_option("--format", ary_args.format, "json|table");

    FactorizationsArgs factorizations_args;
    CLI::App* factorizations_cmd =
        app.add_subcommand("factorizations", "Ordered factorizations of n");
    factorizations_cmd->add_option("--n", factorizations_args.n, "integer >= 2")->required();
    factorizations_cmd->add_option("--format", factorizations_args.format, "json|table");

    MacMahonArgs perfect_args;
    CLI::App* perfect_cmd = app.add_subcommand("perfect", "Perfect partitions of m");
    perfect_cmd->add_option("--m", perfect_args.m, "target integer")->required();
    perfect_cmd->add_option("--format", perfect_args.format, "json|table");

    MacMahonArgs subperfect_args;
    CLI::App* subperfect_cmd = app.add_subcommand("subperfect", "Subperfect partitions of m");
    subperfect_cmd->add_option("--m", subperfect_args.m, "target integer")->required();
    subperfect_cmd->add_option("--format", subperfect_args.format, "json|table");

    PlanArgs plan_args;
    CLI::App* plan_cmd = app.add_subcommand("plan", "Weighing plan for a weight multiset");
    plan_cmd->add_option("--m", plan_args.m, "use the canonical weights for m");
    plan_cmd->add_option("--weights", plan_args.weights, "comma-separated weights");
    plan_cmd->add_option("--mode", plan_args.mode, "two-pan|one-pan|r-general");
    plan_cmd->add_option("--r", plan_args.r, "coefficient cap for r-general");
    plan_cmd->add_option("--targets", plan_args.targets, "range a..b or comma list");
    plan_cmd->add_option("--format", plan_args.format, "json|table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (enumerate_cmd->parsed()) return run_enumerate(enumerate_args);
        if (count_cmd->parsed()) return run_count(count_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (ternary_cmd->parsed()) return run_ary("ternary", ternary_args);
        if (ary_cmd->parsed()) return run_ary("ary", ary_args);
        if (factorizations_cmd->parsed()) return run_factorizations(factorizations_args);
        if (perfect_cmd->parsed()) return run_macmahon("perfect", perfect_args);
        if (subperfect_cmd->parsed()) return run_macmahon("subperfect", subperfect_args);
        if (plan_cmd->parsed()) return run_plan(plan_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
