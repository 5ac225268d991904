#include "labelcut/bounds.hpp"
#include "labelcut/errors.hpp"
#include "labelcut/exact.hpp"
#include "labelcut/gap_report.hpp"
#include "labelcut/generators.hpp"
#include "labelcut/instance_io.hpp"
#include "labelcut/relaxation.hpp"
#include "labelcut/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace labelcut;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string f6(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return buffer;
}

void print_cut(const CutResult& cut) {
    if (cut.exact) {
        std::cout << "opt " << cut.size << "\n";
        std::cout << "witness";
        for (int l : cut.witness) std::cout << " " << l;
        std::cout << "\n";
    } else {
        std::cout << "opt >" << cut.size << "\n";
    }
    std::cout << "method " << cut.method << "\n";
    std::cout << "nodes " << cut.nodes << "\n";
}

struct GenerateArgs {
    std::string family;
    int m = 0;
    int k = 0, d = 0, h = 0;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    long long max_edges = 10'000'000;
    std::string out, meta;
};

int run_generate(const GenerateArgs& args) {
    if (args.family == "path") {
        const Instance inst = make_path_instance(args.m);
        const std::string out = args.out.empty() ? "path-m" + std::to_string(args.m) + ".lc"
                                                 : args.out;
        save_instance(inst, out);
        std::cout << "wrote " << out << " (n=" << inst.vertex_count << " m=" << inst.edge_count()
                  << " q=" << inst.label_count << ")\n";
        return kExitOk;
    }

    GadgetParams params;
    if (args.epsilon > 0.0) {
        params = derive_params(args.epsilon, args.k, args.seed);
        std::cout << "derived d=" << params.d << " h=" << params.h
                  << " delta=" << params.asym->delta << " beta=" << params.asym->beta
                  << " c=" << params.asym->c << "\n";
    } else {
        params.k = args.k;
        params.d = args.d;
        params.h = args.h;
        params.seed = args.seed;
    }
    const long long predicted = predicted_edge_count(params);
    if (predicted > args.max_edges)
        throw ResourceError("predicted edge count " + std::to_string(predicted) +
                            " exceeds --max-edges " + std::to_string(args.max_edges));

    const GadgetInstance gi = make_gap_instance(params);
    const std::string stem = "gadget-k" + std::to_string(params.k) + "-d" +
                             std::to_string(params.d) + "-h" + std::to_string(params.h) + "-s" +
                             std::to_string(params.seed);
    const std::string out = args.out.empty() ? stem + ".lc" : args.out;
    const std::string meta = args.meta.empty() ? stem + ".meta" : args.meta;
    save_instance(gi.instance, out);
    write_text_file(meta, emit_metadata(gi));
    std::cout << "wrote " << out << " and " << meta << " (n=" << gi.instance.vertex_count
              << " m=" << gi.instance.edge_count() << " q=" << gi.instance.label_count << ")\n";
    return kExitOk;
}

int run_solve_exact(const std::string& input, const std::string& method, std::optional<int> cap) {
    const Instance inst = load_instance(input);
    CutResult cut;
    if (method == "exhaustive") {
        cut = min_label_cut_exhaustive(inst, cap);
    } else {
        if (cap) throw CLI::ValidationError("--cap applies to --method exhaustive only");
        cut = min_label_cut_bnb(inst);
    }
    print_cut(cut);
    return kExitOk;
}

int run_solve_lp(const std::string& input, const std::string& variant, const std::string& oracle,
                 const std::string& meta, double tol, const std::string& emit_lp) {
    const LpVariant v = variant == "lp1" ? LpVariant::lp1 : LpVariant::lp2;
    RelaxationResult res;
    if (oracle == "gadget") {
        if (v == LpVariant::lp1)
            throw CLI::ValidationError("--oracle gadget applies to --variant lp2 only");
        if (meta.empty()) throw CLI::ValidationError("--oracle gadget requires --meta FILE");
        GadgetInstance gi = parse_metadata(read_text_file(meta));
        if (!input.empty()) {
            const Instance from_file = load_instance(input);
            if (emit_instance(from_file) != emit_instance(gi.instance))
                throw std::invalid_argument("instance file does not match the metadata");
        }
        res = solve_relaxation(gi, v, Lp2Oracle::gadget, tol);
        if (!emit_lp.empty())
            write_text_file(emit_lp, emit_lp_text(res.cuts, gi.instance.label_count));
    } else {
        if (input.empty()) throw CLI::ValidationError("instance file required");
        const Instance inst = load_instance(input);
        res = solve_relaxation(inst, v, tol);
        if (!emit_lp.empty()) write_text_file(emit_lp, emit_lp_text(res.cuts, inst.label_count));
    }
    if (res.status == RelaxStatus::disconnected) {
        std::cout << "status disconnected\nvalue 0.000000\n";
        return kExitOk;
    }
    std::cout << "status optimal\n";
    std::cout << "value " << f6(res.value) << "\n";
    std::cout << "cuts " << res.iterations << "\n";
    std::cout << "active " << res.active.size() << "\n";
    return kExitOk;
}

struct GapArgs {
    std::string family;
    std::vector<int> ms, ks, ds, hs;
    std::vector<std::uint64_t> seeds;
    int cap = -1;
    bool timings = false;
    int jobs = 1;
    std::string out, records;
};

int run_gap(const GapArgs& args) {
    GapGridSpec spec;
    spec.path_family = args.family == "path";
    spec.ms = args.ms;
    spec.ks = args.ks;
    spec.ds = args.ds;
    spec.hs = args.hs;
    spec.seeds = args.seeds.empty() ? std::vector<std::uint64_t>{1} : args.seeds;
    if (args.cap >= 0) spec.cap = args.cap;
    spec.timings = args.timings;
    spec.jobs = args.jobs;

    if (spec.path_family && spec.ms.empty())
        throw CLI::ValidationError("path family needs --m values");
    if (!spec.path_family && (spec.ks.empty() || spec.ds.empty() || spec.hs.empty()))
        throw CLI::ValidationError("gadget family needs --k, --d and --h values");

    const std::vector<GapRow> rows = run_gap_grid(spec);
    const std::string csv = gap_rows_to_csv(rows);
    if (args.out.empty())
        std::cout << csv;
    else
        write_text_file(args.out, csv);
    if (!args.records.empty()) {
        std::string rec;
        for (const GapRow& row : rows) rec += to_record(row) + "\n";
        write_text_file(args.records, rec);
    }
    return kExitOk;
}

int run_verify(const VerifyOptions& options, const std::string& report_path) {
    const std::vector<CheckReport> reports = run_verification(options);
    bool all_pass = true;
    std::string records;
    for (const CheckReport& r : reports) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        records += to_record(r) + "\n";
        all_pass = all_pass && r.pass;
    }
    if (!report_path.empty()) write_text_file(report_path, records);
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum label s-t cut workbench: instance generators, exact solvers,\n"
                 "relaxation solvers and numeric verification of the analysis bounds."};
    app.require_subcommand(1);
    // --h is a gadget size flag, so help stays on --help only
    app.set_help_flag("--help", "print help");

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "write an instance file (plus gadget metadata)");
    generate->set_help_flag("--help", "print help");
    generate->add_option("family", gen.family, "path | gadget")
        ->required()
        ->check(CLI::IsMember({"path", "gadget"}));
    generate->add_option("--m", gen.m, "path edge count");
    generate->add_option("--k", gen.k, "gadget ground set size");
    generate->add_option("--d", gen.d, "diamonds per chain");
    generate->add_option("--h", gen.h, "chains per shutter");
    generate->add_option("--seed", gen.seed, "master seed");
    generate->add_option("--epsilon", gen.epsilon, "derive d, h from epsilon in (0, 1/3)");
    generate->add_option("--max-edges", gen.max_edges, "refuse larger generations");
    generate->add_option("--out", gen.out, "instance output path");
    generate->add_option("--meta", gen.meta, "metadata output path (gadget)");

    std::string se_input, se_method = "bnb";
    int se_cap = -1;
    CLI::App* solve_exact = app.add_subcommand("solve-exact", "exact minimum label cut");
    solve_exact->add_option("instance", se_input, "instance file")->required();
    solve_exact->add_option("--method", se_method, "exhaustive | bnb")
        ->check(CLI::IsMember({"exhaustive", "bnb"}));
    solve_exact->add_option("--cap", se_cap, "stop after this size (exhaustive)");

    std::string lp_input, lp_variant = "lp2", lp_oracle = "generic", lp_meta, lp_emit;
    double lp_tol = 1e-7;
    CLI::App* solve_lp = app.add_subcommand("solve-lp", "relaxation value by cutting planes");
    solve_lp->add_option("instance", lp_input, "instance file");
    solve_lp->add_option("--variant", lp_variant, "lp1 | lp2")
        ->check(CLI::IsMember({"lp1", "lp2"}));
    solve_lp->add_option("--oracle", lp_oracle, "generic | gadget (lp2 only)")
        ->check(CLI::IsMember({"generic", "gadget"}));
    solve_lp->add_option("--meta", lp_meta, "gadget metadata file");
    solve_lp->add_option("--tol", lp_tol, "violation tolerance");
    solve_lp->add_option("--emit-lp", lp_emit, "write the accumulated LP in LP text format");

    GapArgs gap;
    CLI::App* gap_cmd = app.add_subcommand("gap", "integrality gap experiment grid as CSV");
    gap_cmd->set_help_flag("--help", "print help");
    gap_cmd->add_option("--family", gap.family, "path | gadget")
        ->required()
        ->check(CLI::IsMember({"path", "gadget"}));
    gap_cmd->add_option("--m", gap.ms, "path sizes");
    gap_cmd->add_option("--k", gap.ks, "gadget k values");
    gap_cmd->add_option("--d", gap.ds, "gadget d values");
    gap_cmd->add_option("--h", gap.hs, "gadget h values");
    gap_cmd->add_option("--seeds", gap.seeds, "gadget seeds (default 1)");
    gap_cmd->add_option("--cap", gap.cap, "exact solver fallback cap");
    gap_cmd->add_flag("--timings", gap.timings, "fill timing columns (not reproducible)");
    gap_cmd->add_option("--jobs", gap.jobs, "parallel rows");
    gap_cmd->add_option("--out", gap.out, "CSV output path (default stdout)");
    gap_cmd->add_option("--records", gap.records, "structured record output path");

    VerifyOptions vo;
    std::string verify_report;
    CLI::App* verify = app.add_subcommand("verify", "run the bound and oracle check suite");
    verify->add_option("--trials", vo.trials, "Monte Carlo trials per repetition");
    verify->add_option("--reps", vo.repetitions, "Monte Carlo repetitions");
    verify->add_option("--seed", vo.seed, "master seed");
    verify->add_option("--epsilon", vo.epsilon, "epsilon for the z crossover scan");
    verify->add_option("--report", verify_report, "write structured records here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        if (solve_exact->parsed())
            return run_solve_exact(se_input, se_method,
                                   se_cap >= 0 ? std::optional<int>(se_cap) : std::nullopt);
        if (solve_lp->parsed())
            return run_solve_lp(lp_input, lp_variant, lp_oracle, lp_meta, lp_tol, lp_emit);
        if (gap_cmd->parsed()) return run_gap(gap);
        if (verify->parsed()) return run_verify(vo, verify_report);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
