#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "subelect/antagonism.hpp"
#include "subelect/clones.hpp"
#include "subelect/election.hpp"
#include "subelect/errors.hpp"
#include "subelect/generators.hpp"
#include "subelect/identity.hpp"
#include "subelect/ilp.hpp"
#include "subelect/report.hpp"

namespace subelect::cli {

// Bad flag combinations discovered after CLI11 parsing; mapped to exit 2.
struct UsageError final : SubelectError {
    explicit UsageError(const std::string& detail) : SubelectError("usage: " + detail) {}
};

enum class FileFormat { Profile, PreflibSoc };

struct Outcome {
    RunReport report;
    int exit_code = 0;
    std::string error;  // set on non-zero exits without a report
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedHeader("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SubelectError("cannot write '" + path + "'");
    out << content;
}

inline Election load_election(const std::string& path, FileFormat format) {
    const std::string text = read_file(path);
    return format == FileFormat::Profile ? parse_election(text) : parse_preflib_soc(text);
}

namespace detail {

inline int exit_code_for(const std::exception& err) {
    if (dynamic_cast<const MalformedHeader*>(&err) || dynamic_cast<const NotAPermutation*>(&err) ||
        dynamic_cast<const UnknownCandidate*>(&err) || dynamic_cast<const UsageError*>(&err))
        return 2;
    if (dynamic_cast<const BadWidth*>(&err) || dynamic_cast<const BadVoterCount*>(&err) ||
        dynamic_cast<const OddVoterCount*>(&err) || dynamic_cast<const EmptySelection*>(&err) ||
        dynamic_cast<const InvalidSpec*>(&err))
        return 3;
    return 1;
}

template <typename Body>
Outcome run_command(const std::string& name, Body&& body) {
    Outcome outcome;
    outcome.report.command = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome.report);
    } catch (const BudgetExceeded& err) {
        outcome.report.status = "budget_exceeded";
        outcome.report.result = {{"error", err.what()}};
        outcome.exit_code = 4;
    } catch (const std::exception& err) {
        outcome.exit_code = exit_code_for(err);
        outcome.error = err.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    outcome.report.wall_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return outcome;
}

// Voter tokens: "v3" is 1-based (so v1 is voter index 0), a bare integer is a
// 0-based index.
inline std::vector<int> parse_voter_list(const std::string& list, int num_voters) {
    std::vector<int> out;
    std::istringstream in(list);
    std::string token;
    while (std::getline(in, token, ',')) {
        token = subelect::detail::strip(token);
        if (token.empty()) continue;
        int index;
        try {
            if (token[0] == 'v')
                index = std::stoi(token.substr(1)) - 1;
            else
                index = std::stoi(token);
        } catch (const std::exception&) {
            throw UsageError("bad voter token '" + token + "'");
        }
        if (index < 0 || index >= num_voters) throw UsageError("voter out of range: " + token);
        out.push_back(index);
    }
    if (out.empty()) throw EmptySelection();
    return out;
}

inline std::vector<int> parse_candidate_list(const Election& e, const std::string& list) {
    std::vector<int> out;
    std::istringstream in(list);
    std::string token;
    while (std::getline(in, token, ',')) {
        token = subelect::detail::strip(token);
        if (token.empty()) continue;
        out.push_back(e.candidate_index(token));
    }
    if (out.empty()) throw EmptySelection();
    return out;
}

inline void ensure_witness(const Election& e, const SubelectionWitness& w,
                           bool require_balanced = true) {
    if (!witness_valid(e, w, require_balanced))
        throw SubelectError("internal error: produced witness failed re-validation");
}

inline std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

}  // namespace detail

struct ClonesArgs {
    std::string file;
    FileFormat format = FileFormat::Profile;
    int m_prime = 0;
    std::optional<int> n_prime;
    bool count = false;
    std::optional<std::string> swap_set;
};

inline Outcome cmd_clones(const ClonesArgs& args) {
    return detail::run_command("clones", [&](RunReport& report) {
        const Election e = load_election(args.file, args.format);
        report.inputs = {{"file", args.file}, {"m_prime", args.m_prime}};
        if (args.n_prime) report.inputs["n_prime"] = *args.n_prime;

        if (args.swap_set) {
            report.inputs["swap_set"] = *args.swap_set;
            const std::vector<int> set = detail::parse_candidate_list(e, *args.swap_set);
            const int kept = args.n_prime.value_or(e.num_voters());
            auto [swaps, voters] = clone_swap_distance(e, set, kept);
            report.result = {{"total_swaps", swaps}, {"voters", voters}};
            return;
        }
        if (args.count) {
            if (!args.n_prime) throw UsageError("--count needs --n-prime");
            report.result = {
                {"count", count_hidden_clones(e, args.m_prime, *args.n_prime).get_str()}};
            return;
        }
        if (args.n_prime) {
            if (auto w = hidden_clones(e, args.m_prime, *args.n_prime)) {
                detail::ensure_witness(e, *w);
                report.result = {
                    {"witness", witness_to_json(e, *w, static_cast<int>(w->voters.size()))}};
            } else {
                report.status = "not_found";
                report.result = nullptr;
            }
            return;
        }
        auto [count, w] = max_clone(e, args.m_prime);
        detail::ensure_witness(e, w);
        report.result = {{"n_prime", count}, {"witness", witness_to_json(e, w, count)}};
    });
}

struct IdentityArgs {
    std::string file;
    FileFormat format = FileFormat::Profile;
    std::optional<int> m_prime;
    std::optional<int> n_prime;
    std::optional<std::string> voters;
    std::optional<std::string> candidates;
    bool count = false;
    bool signature = false;
    std::optional<std::string> lp_out;
    bool solve_flag = false;
    std::string strategy = "auto";
    SearchOptions options;
};

namespace detail {

inline SearchStrategy parse_strategy(const std::string& name) {
    if (name == "auto") return SearchStrategy::Auto;
    if (name == "by-voters") return SearchStrategy::ByVoters;
    if (name == "by-candidates") return SearchStrategy::ByCandidates;
    throw UsageError("unknown strategy '" + name + "'");
}

}  // namespace detail

inline Outcome cmd_identity(const IdentityArgs& args) {
    return detail::run_command("identity", [&](RunReport& report) {
        const Election e = load_election(args.file, args.format);
        report.inputs = {{"file", args.file}};
        if (args.m_prime) report.inputs["m_prime"] = *args.m_prime;
        if (args.n_prime) report.inputs["n_prime"] = *args.n_prime;

        if (args.signature) {
            report.result = {{"points", signature_to_json(identity_signature(e, args.options))}};
            return;
        }
        if (args.voters) {
            const std::vector<int> voters = detail::parse_voter_list(*args.voters, e.num_voters());
            report.inputs["voters"] = voters;
            if (args.count) {
                if (!args.m_prime) throw UsageError("--count with --voters needs --m-prime");
                report.result = {
                    {"count",
                     count_identity_candidate_subsets(e, voters, *args.m_prime).get_str()}};
                return;
            }
            if (!args.m_prime) throw UsageError("--voters needs --m-prime");
            if (auto chain = verify_identity_voters(e, voters, *args.m_prime)) {
                SubelectionWitness w;
                w.kind = WitnessKind::Identity;
                w.candidates = *chain;
                w.voters = voters;
                detail::ensure_witness(e, w);
                report.result = {{"witness", witness_to_json(e, w)}};
            } else {
                report.status = "not_found";
                report.result = nullptr;
            }
            return;
        }
        if (args.candidates) {
            const std::vector<int> cands = detail::parse_candidate_list(e, *args.candidates);
            report.inputs["candidates"] = *args.candidates;
            if (args.count) {
                if (!args.n_prime) throw UsageError("--count with --candidates needs --n-prime");
                report.result = {
                    {"count", count_identity_voter_subsets(e, cands, *args.n_prime).get_str()}};
                return;
            }
            if (!args.n_prime) throw UsageError("--candidates needs --n-prime");
            if (auto found = verify_identity_candidates(e, cands, *args.n_prime)) {
                SubelectionWitness w;
                w.kind = WitnessKind::Identity;
                w.candidates = found->first;
                w.voters = found->second;
                detail::ensure_witness(e, w);
                report.result = {{"witness", witness_to_json(e, w)}};
            } else {
                report.status = "not_found";
                report.result = nullptr;
            }
            return;
        }
        if (!args.m_prime) throw UsageError("identity needs --m-prime");

        if (args.lp_out || args.solve_flag) {
            const IlpModel model = args.n_prime ? build_hidden_id(e, *args.m_prime, *args.n_prime)
                                                : build_max_id(e, *args.m_prime);
            if (args.lp_out) {
                write_file(*args.lp_out, export_lp(model));
                report.result["lp_file"] = *args.lp_out;
            }
            if (args.solve_flag) {
                if (args.options.backend != IlpBackend::Internal)
                    throw UsageError("--solve needs --backend internal");
                const IlpSolution sol = solve(model, args.options.ilp_node_budget);
                if (sol.status == IlpStatus::BudgetExceededStatus)
                    throw BudgetExceeded("ILP node budget exhausted");
                if (sol.status == IlpStatus::Infeasible) {
                    report.status = "not_found";
                    report.result["objective"] = nullptr;
                    return;
                }
                report.result["objective"] = sol.objective_value;
                const SubelectionWitness w = decode_witness(model, sol);
                if (sol.objective_value == 0) detail::ensure_witness(e, w);
                report.result["witness"] = witness_to_json(e, w);
            }
            return;
        }
        if (args.count) {
            if (!args.n_prime) throw UsageError("--count needs --n-prime");
            report.result = {{"count", count_hidden_id(e, *args.m_prime, *args.n_prime,
                                                       detail::parse_strategy(args.strategy),
                                                       args.options)
                                           .get_str()}};
            return;
        }
        if (args.n_prime) {
            if (auto w = hidden_id(e, *args.m_prime, *args.n_prime,
                                   detail::parse_strategy(args.strategy), args.options)) {
                detail::ensure_witness(e, *w);
                report.result = {{"witness", witness_to_json(e, *w)}};
            } else {
                report.status = "not_found";
                report.result = nullptr;
            }
            return;
        }
        auto [best, w] = max_id(e, *args.m_prime, args.options);
        detail::ensure_witness(e, w);
        report.result = {{"n_prime", best}, {"witness", witness_to_json(e, w)}};
    });
}

struct AntagonismArgs {
    std::string file;
    FileFormat format = FileFormat::Profile;
    std::optional<int> m_prime;
    std::optional<int> n_prime;
    std::string variant = "rigid";
    bool signature = false;
    std::optional<std::string> lp_out;
    bool solve_flag = false;
    std::string strategy = "auto";
    SearchOptions options;
};

namespace detail {

inline AntagonismVariant parse_variant(const std::string& name) {
    if (name == "rigid") return AntagonismVariant::Rigid;
    if (name == "sum") return AntagonismVariant::Sum;
    if (name == "product") return AntagonismVariant::Product;
    throw UsageError("unknown variant '" + name + "'");
}

}  // namespace detail

inline Outcome cmd_antagonism(const AntagonismArgs& args) {
    return detail::run_command("antagonism", [&](RunReport& report) {
        const Election e = load_election(args.file, args.format);
        report.inputs = {{"file", args.file}, {"variant", args.variant}};
        if (args.m_prime) report.inputs["m_prime"] = *args.m_prime;
        if (args.n_prime) report.inputs["n_prime"] = *args.n_prime;

        if (args.signature) {
            report.result = {{"points", signature_to_json(antagonism_signature(e, args.options))}};
            return;
        }
        if (!args.m_prime) throw UsageError("antagonism needs --m-prime");

        if (args.lp_out || args.solve_flag) {
            if (args.variant != "rigid") throw UsageError("ILP exists for the rigid variant only");
            const IlpModel model = args.n_prime ? build_hidden_an(e, *args.m_prime, *args.n_prime)
                                                : build_max_an(e, *args.m_prime);
            if (args.lp_out) {
                write_file(*args.lp_out, export_lp(model));
                report.result["lp_file"] = *args.lp_out;
            }
            if (args.solve_flag) {
                if (args.options.backend != IlpBackend::Internal)
                    throw UsageError("--solve needs --backend internal");
                const IlpSolution sol = solve(model, args.options.ilp_node_budget);
                if (sol.status == IlpStatus::BudgetExceededStatus)
                    throw BudgetExceeded("ILP node budget exhausted");
                if (sol.status == IlpStatus::Infeasible) {
                    report.status = "not_found";
                    report.result["objective"] = nullptr;
                    return;
                }
                report.result["objective"] = sol.objective_value;
                const SubelectionWitness w = decode_witness(model, sol);
                if (sol.objective_value == 0 && args.n_prime) detail::ensure_witness(e, w);
                report.result["witness"] = witness_to_json(e, w);
            }
            return;
        }
        const AntagonismVariant variant = detail::parse_variant(args.variant);
        if (args.n_prime) {
            if (variant != AntagonismVariant::Rigid)
                throw UsageError("hidden antagonism search uses the rigid variant");
            if (auto w = hidden_an(e, *args.m_prime, *args.n_prime,
                                   detail::parse_strategy(args.strategy), args.options)) {
                detail::ensure_witness(e, *w);
                report.result = {{"witness", witness_to_json(e, *w)}};
            } else {
                report.status = "not_found";
                report.result = nullptr;
            }
            return;
        }
        const MaxAnResult best = max_an(e, *args.m_prime, variant, args.options);
        report.result = {{"score", best.score}};
        if (best.witness) {
            detail::ensure_witness(e, *best.witness, variant == AntagonismVariant::Rigid);
            report.result["witness"] = witness_to_json(e, *best.witness);
        } else {
            report.result["witness"] = nullptr;
        }
    });
}

struct CurveArgs {
    std::string file;
    FileFormat format = FileFormat::Profile;
    std::string kind;  // clone | id | an
    std::string out;
    SearchOptions options;
};

// CSV with header "m_prime,value" and one row per m' in [1, m]; the MaxClone /
// Max-ID / Max-AN curve of the election.
inline Outcome cmd_curve(const CurveArgs& args) {
    return detail::run_command("curve", [&](RunReport& report) {
        const Election e = load_election(args.file, args.format);
        report.inputs = {{"file", args.file}, {"kind", args.kind}, {"out", args.out}};
        std::ostringstream csv;
        csv << "m_prime,value\n";
        nlohmann::json values = nlohmann::json::array();
        for (int m_prime = 1; m_prime <= e.num_candidates(); ++m_prime) {
            long long value;
            if (args.kind == "clone")
                value = max_clone(e, m_prime).first;
            else if (args.kind == "id")
                value = max_id(e, m_prime, args.options).first;
            else if (args.kind == "an")
                value = max_an(e, m_prime, AntagonismVariant::Rigid, args.options).score;
            else
                throw UsageError("unknown curve kind '" + args.kind + "'");
            csv << m_prime << ',' << value << '\n';
            values.push_back(value);
        }
        write_file(args.out, csv.str());
        report.result = {{"out", args.out}, {"values", values}};
    });
}

namespace detail {

inline CultureSpec spec_from_cli(const std::string& culture, int m, int n, std::uint64_t seed,
                                 const std::vector<std::string>& params) {
    const auto& names = culture_names();
    const auto it = names.find(culture);
    if (it == names.end()) throw InvalidSpec("unknown culture '" + culture + "'");
    CultureSpec spec;
    spec.kind = it->second;
    spec.num_candidates = m;
    spec.num_voters = n;
    spec.seed = seed;
    for (const std::string& param : params) {
        const std::size_t eq = param.find('=');
        if (eq == std::string::npos) throw InvalidSpec("expected key=value, got '" + param + "'");
        const std::string key = param.substr(0, eq);
        const std::string value = param.substr(eq + 1);
        try {
            if (key == "alpha")
                spec.alpha = std::stod(value);
            else if (key == "phi")
                spec.phi = std::stod(value);
            else if (key == "normalized")
                spec.normalized = value == "true" || value == "1";
            else if (key == "dim") {
                if (value == "1") spec.domain = EuclideanDomain::Line;
                else if (value == "2") spec.domain = EuclideanDomain::Square;
                else if (value == "3") spec.domain = EuclideanDomain::Cube;
                else if (value == "circle") spec.domain = EuclideanDomain::Circle;
                else throw InvalidSpec("dim must be 1, 2, 3 or circle");
            } else {
                throw InvalidSpec("unknown parameter '" + key + "'");
            }
        } catch (const InvalidSpec&) {
            throw;
        } catch (const std::exception&) {
            throw InvalidSpec("bad value for '" + key + "'");
        }
    }
    return spec;
}

}  // namespace detail

struct GenerateArgs {
    std::string culture;
    int m = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> params;
    std::string out;
};

inline Outcome cmd_generate(const GenerateArgs& args) {
    return detail::run_command("generate", [&](RunReport& report) {
        const CultureSpec spec =
            detail::spec_from_cli(args.culture, args.m, args.n, args.seed, args.params);
        report.inputs = {{"culture", args.culture}, {"m", args.m}, {"n", args.n},
                         {"seed", args.seed},       {"out", args.out}};
        const Election e = sample(spec);
        write_file(args.out, format_election(e));
        report.result = {{"out", args.out},
                         {"m", e.num_candidates()},
                         {"n", e.num_voters()}};
    });
}

struct BatchStatsArgs {
    std::string culture;
    int m = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> params;
    int repeat = 1;
    std::string metric;  // maxclone2 | maxid5 | maxan5
    std::string out;
};

// Per-sample metric values plus mean and standard deviation (population form)
// as trailing rows of the CSV.
inline Outcome cmd_batch_stats(const BatchStatsArgs& args) {
    return detail::run_command("batch-stats", [&](RunReport& report) {
        const CultureSpec spec =
            detail::spec_from_cli(args.culture, args.m, args.n, args.seed, args.params);
        report.inputs = {{"culture", args.culture}, {"m", args.m},
                         {"n", args.n},             {"seed", args.seed},
                         {"repeat", args.repeat},   {"metric", args.metric}};
        if (args.repeat < 1) throw InvalidSpec("repeat must be positive");

        const std::vector<Election> batch = sample_batch(spec, args.repeat);
        std::vector<long long> values;
        for (const Election& e : batch) {
            if (args.metric == "maxclone2")
                values.push_back(max_clone(e, 2).first);
            else if (args.metric == "maxid5")
                values.push_back(max_id(e, 5).first);
            else if (args.metric == "maxan5")
                values.push_back(max_an(e, 5, AntagonismVariant::Rigid).score);
            else
                throw UsageError("unknown metric '" + args.metric + "'");
        }
        double mean = 0.0;
        for (long long v : values) mean += static_cast<double>(v);
        mean /= static_cast<double>(values.size());
        double variance = 0.0;
        for (long long v : values) {
            const double d = static_cast<double>(v) - mean;
            variance += d * d;
        }
        variance /= static_cast<double>(values.size());
        const double stddev = std::sqrt(variance);

        std::ostringstream csv;
        csv << "sample,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) csv << i << ',' << values[i] << '\n';
        csv << "mean," << detail::format_double(mean) << '\n';
        csv << "std," << detail::format_double(stddev) << '\n';
        if (!args.out.empty()) {
            write_file(args.out, csv.str());
            report.inputs["out"] = args.out;
        }
        report.result = {{"mean", mean}, {"std", stddev}, {"values", values}};
    });
}

}  // namespace subelect::cli
