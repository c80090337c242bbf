// Command-line front end: detect, maximize, count and approximate hidden
// consistent subelections (clone sets, identities, antagonisms) in ordinal
// elections, generate synthetic profiles, and export 0-1 programs.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "subelect/cli.hpp"

namespace {

using subelect::cli::FileFormat;
using subelect::cli::Outcome;

int finish(const Outcome& outcome) {
    if (!outcome.error.empty()) {
        std::cerr << "error: " << outcome.error << '\n';
        return outcome.exit_code;
    }
    std::cout << outcome.report.to_json().dump(2) << '\n';
    return outcome.exit_code;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Input format: profile or preflib-soc")
        ->check(CLI::IsMember({"profile", "preflib-soc"}))
        ->default_val("profile");
}

FileFormat to_format(const std::string& name) {
    return name == "preflib-soc" ? FileFormat::PreflibSoc : FileFormat::Profile;
}

void add_search_options(CLI::App* cmd, subelect::SearchOptions& options, std::string& backend) {
    cmd->add_option("--budget", options.subset_budget, "Subset enumeration budget");
    cmd->add_option("--node-budget", options.ilp_node_budget, "ILP solver node budget");
    cmd->add_option("--backend", backend, "ILP backend: internal or none")
        ->check(CLI::IsMember({"internal", "none"}))
        ->default_val("internal");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hidden consistent subelection analysis"};
    app.require_subcommand(1);

    // clones
    subelect::cli::ClonesArgs clones;
    std::string clones_format = "profile";
    auto* clones_cmd = app.add_subcommand("clones", "Clone-set detection and scoring");
    clones_cmd->add_option("file", clones.file, "Profile file")->required();
    add_format_flag(clones_cmd, clones_format);
    clones_cmd->add_option("--m-prime", clones.m_prime, "Clone set size")->required();
    int clones_n = -1;
    clones_cmd->add_option("--n-prime", clones_n, "Required voter count");
    clones_cmd->add_flag("--count", clones.count, "Count (set, voters) pairs");
    std::string swap_set;
    clones_cmd->add_option("--swap-set", swap_set,
                           "Comma-separated candidate labels to score by swap distance");

    // identity
    subelect::cli::IdentityArgs identity;
    std::string identity_format = "profile", identity_backend = "internal";
    auto* id_cmd = app.add_subcommand("identity", "Hidden identity search and counting");
    id_cmd->add_option("file", identity.file, "Profile file")->required();
    add_format_flag(id_cmd, identity_format);
    int id_m = -1, id_n = -1;
    id_cmd->add_option("--m-prime", id_m, "Candidate count");
    id_cmd->add_option("--n-prime", id_n, "Voter count");
    std::string id_voters, id_candidates;
    id_cmd->add_option("--voters", id_voters, "Pin a voter set (v1,v3 or 0,2)");
    id_cmd->add_option("--candidates", id_candidates, "Pin a candidate set by labels");
    id_cmd->add_flag("--count", identity.count, "Count subelections instead of searching");
    id_cmd->add_flag("--signature", identity.signature, "Emit the full Pareto frontier");
    std::string id_lp;
    id_cmd->add_option("--lp-out", id_lp, "Write the 0-1 program in LP format");
    id_cmd->add_flag("--solve", identity.solve_flag, "Solve with the internal branch and bound");
    id_cmd->add_option("--strategy", identity.strategy, "auto, by-voters or by-candidates")
        ->check(CLI::IsMember({"auto", "by-voters", "by-candidates"}))
        ->default_val("auto");
    add_search_options(id_cmd, identity.options, identity_backend);

    // antagonism
    subelect::cli::AntagonismArgs antagonism;
    std::string an_format = "profile", an_backend = "internal";
    auto* an_cmd = app.add_subcommand("antagonism", "Hidden antagonism search and scoring");
    an_cmd->add_option("file", antagonism.file, "Profile file")->required();
    add_format_flag(an_cmd, an_format);
    int an_m = -1, an_n = -1;
    an_cmd->add_option("--m-prime", an_m, "Candidate count");
    an_cmd->add_option("--n-prime", an_n, "Voter count (even)");
    an_cmd->add_option("--variant", antagonism.variant, "rigid, sum or product")
        ->check(CLI::IsMember({"rigid", "sum", "product"}))
        ->default_val("rigid");
    an_cmd->add_flag("--signature", antagonism.signature, "Emit the full Pareto frontier");
    std::string an_lp;
    an_cmd->add_option("--lp-out", an_lp, "Write the 0-1 program in LP format");
    an_cmd->add_flag("--solve", antagonism.solve_flag, "Solve with the internal branch and bound");
    an_cmd->add_option("--strategy", antagonism.strategy, "auto, by-voters or by-candidates")
        ->check(CLI::IsMember({"auto", "by-voters", "by-candidates"}))
        ->default_val("auto");
    add_search_options(an_cmd, antagonism.options, an_backend);

    // curve
    subelect::cli::CurveArgs curve;
    std::string curve_format = "profile", curve_backend = "internal";
    auto* curve_cmd = app.add_subcommand("curve", "Max* values for every m'");
    curve_cmd->add_option("file", curve.file, "Profile file")->required();
    add_format_flag(curve_cmd, curve_format);
    curve_cmd->add_option("--kind", curve.kind, "clone, id or an")
        ->check(CLI::IsMember({"clone", "id", "an"}))
        ->required();
    curve_cmd->add_option("--out", curve.out, "Output CSV path")->required();
    add_search_options(curve_cmd, curve.options, curve_backend);

    // generate
    subelect::cli::GenerateArgs generate;
    auto* gen_cmd = app.add_subcommand("generate", "Sample a synthetic profile");
    gen_cmd->add_option("--culture", generate.culture, "Statistical culture name")->required();
    gen_cmd->add_option("--m", generate.m, "Number of candidates")->required();
    gen_cmd->add_option("--n", generate.n, "Number of voters")->required();
    gen_cmd->add_option("--seed", generate.seed, "64-bit seed")->required();
    gen_cmd->add_option("--param", generate.params, "Culture parameter key=value");
    gen_cmd->add_option("--out", generate.out, "Output profile path")->required();

    // batch-stats
    subelect::cli::BatchStatsArgs batch;
    auto* batch_cmd = app.add_subcommand("batch-stats", "Metric statistics over a sample batch");
    batch_cmd->add_option("--culture", batch.culture, "Statistical culture name")->required();
    batch_cmd->add_option("--m", batch.m, "Number of candidates")->required();
    batch_cmd->add_option("--n", batch.n, "Number of voters")->required();
    batch_cmd->add_option("--seed", batch.seed, "64-bit seed")->required();
    batch_cmd->add_option("--param", batch.params, "Culture parameter key=value");
    batch_cmd->add_option("--repeat", batch.repeat, "Number of samples")->required();
    batch_cmd->add_option("--metric", batch.metric, "maxclone2, maxid5 or maxan5")
        ->check(CLI::IsMember({"maxclone2", "maxid5", "maxan5"}))
        ->required();
    batch_cmd->add_option("--out", batch.out, "Output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (clones_cmd->parsed()) {
        clones.format = to_format(clones_format);
        if (clones_n >= 0) clones.n_prime = clones_n;
        if (!swap_set.empty()) clones.swap_set = swap_set;
        return finish(subelect::cli::cmd_clones(clones));
    }
    if (id_cmd->parsed()) {
        identity.format = to_format(identity_format);
        if (id_m >= 0) identity.m_prime = id_m;
        if (id_n >= 0) identity.n_prime = id_n;
        if (!id_voters.empty()) identity.voters = id_voters;
        if (!id_candidates.empty()) identity.candidates = id_candidates;
        if (!id_lp.empty()) identity.lp_out = id_lp;
        identity.options.backend = identity_backend == "none" ? subelect::IlpBackend::None
                                                              : subelect::IlpBackend::Internal;
        return finish(subelect::cli::cmd_identity(identity));
    }
    if (an_cmd->parsed()) {
        antagonism.format = to_format(an_format);
        if (an_m >= 0) antagonism.m_prime = an_m;
        if (an_n >= 0) antagonism.n_prime = an_n;
        if (!an_lp.empty()) antagonism.lp_out = an_lp;
        antagonism.options.backend = an_backend == "none" ? subelect::IlpBackend::None
                                                          : subelect::IlpBackend::Internal;
        return finish(subelect::cli::cmd_antagonism(antagonism));
    }
    if (curve_cmd->parsed()) {
        curve.format = to_format(curve_format);
        return finish(subelect::cli::cmd_curve(curve));
    }
    if (gen_cmd->parsed()) return finish(subelect::cli::cmd_generate(generate));
    if (batch_cmd->parsed()) return finish(subelect::cli::cmd_batch_stats(batch));
    return 2;
}
