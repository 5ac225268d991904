#include "labelcut/gap_report.hpp"

#include "labelcut/errors.hpp"
#include "labelcut/relaxation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace labelcut {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string f6(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return buffer;
}

// bnb first; when its guard trips, exhaustive with the cap takes over and
// may report only a lower bound.
CutResult robust_opt(const Instance& inst, std::optional<int> cap) {
    try {
        return min_label_cut_bnb(inst);
    } catch (const ResourceError&) {
        return min_label_cut_exhaustive(inst, cap);
    }
}

void fill_common(GapRow& row, const Instance& inst, std::optional<int> cap, bool timings,
                 const GadgetInstance* gadget) {
    row.n = inst.vertex_count;
    row.m = inst.edge_count();
    row.q = inst.label_count;

    auto t0 = Clock::now();
    const CutResult cut = robust_opt(inst, cap);
    row.t_opt_ms = timings ? ms_since(t0) : 0.0;
    row.opt = cut.size;
    row.opt_exact = cut.exact;

    t0 = Clock::now();
    const RelaxationResult lp1 = solve_relaxation(inst, LpVariant::lp1);
    row.t_lp1_ms = timings ? ms_since(t0) : 0.0;
    row.lp1 = lp1.value;

    t0 = Clock::now();
    const RelaxationResult lp2 =
        gadget ? solve_relaxation(*gadget, LpVariant::lp2, Lp2Oracle::gadget)
               : solve_relaxation(inst, LpVariant::lp2);
    row.t_lp2_ms = timings ? ms_since(t0) : 0.0;
    row.lp2 = lp2.value;

    if (row.opt_exact) {
        row.gap1 = row.opt == 0 ? 1.0 : (row.lp1 > 0.0 ? row.opt / row.lp1 : 0.0);
        row.gap2 = row.opt == 0 ? 1.0 : (row.lp2 > 0.0 ? row.opt / row.lp2 : 0.0);
    }
}

} // namespace

GapRow compute_gap_row_path(int m, bool timings) {
    GapRow row;
    row.instance_id = "path-m" + std::to_string(m);
    const Instance inst = make_path_instance(m);
    fill_common(row, inst, std::nullopt, timings, nullptr);
    return row;
}

GapRow compute_gap_row_gadget(const GadgetParams& params, std::optional<int> cap, bool timings) {
    GapRow row;
    row.instance_id = "gadget-k" + std::to_string(params.k) + "-d" + std::to_string(params.d) +
                      "-h" + std::to_string(params.h) + "-s" + std::to_string(params.seed);
    row.k = params.k;
    row.d = params.d;
    row.h = params.h;
    row.seed = params.seed;
    const GadgetInstance gi = make_gap_instance(params);
    fill_common(row, gi.instance, cap, timings, &gi);
    return row;
}

std::vector<GapRow> run_gap_grid(const GapGridSpec& spec) {
    struct Job {
        bool path;
        int m = 0;
        GadgetParams params;
    };
    std::vector<Job> jobs;
    if (spec.path_family) {
        for (int m : spec.ms) jobs.push_back({true, m, {}});
    } else {
        for (int k : spec.ks)
            for (int d : spec.ds)
                for (int h : spec.hs)
                    for (std::uint64_t seed : spec.seeds) {
                        GadgetParams p;
                        p.k = k;
                        p.d = d;
                        p.h = h;
                        p.seed = seed;
                        jobs.push_back({false, 0, p});
                    }
    }

    std::vector<GapRow> rows(jobs.size());
    std::exception_ptr failure;
    const int total = static_cast<int>(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, spec.jobs))
    for (int i = 0; i < total; ++i) {
        try {
            const Job& job = jobs[static_cast<std::size_t>(i)];
            rows[static_cast<std::size_t>(i)] =
                job.path ? compute_gap_row_path(job.m, spec.timings)
                         : compute_gap_row_gadget(job.params, spec.cap, spec.timings);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string gap_csv_header() {
    return "instance_id,k,d,h,seed,n,m,q,opt,opt_exact,lp1,lp2,gap1,gap2,"
           "t_opt_ms,t_lp1_ms,t_lp2_ms\n";
}

std::string to_csv_row(const GapRow& r) {
    std::ostringstream out;
    out << r.instance_id << "," << r.k << "," << r.d << "," << r.h << "," << r.seed << "," << r.n
        << "," << r.m << "," << r.q << "," << r.opt << "," << (r.opt_exact ? 1 : 0) << ","
        << f6(r.lp1) << "," << f6(r.lp2) << "," << f6(r.gap1) << "," << f6(r.gap2) << ","
        << f6(r.t_opt_ms) << "," << f6(r.t_lp1_ms) << "," << f6(r.t_lp2_ms) << "\n";
    return out.str();
}

std::string gap_rows_to_csv(const std::vector<GapRow>& rows) {
    std::string out = gap_csv_header();
    for (const GapRow& row : rows) out += to_csv_row(row);
    return out;
}

std::string to_record(const GapRow& r) {
    std::ostringstream out;
    out << "instance=" << r.instance_id << " n=" << r.n << " m=" << r.m << " q=" << r.q
        << " opt=" << r.opt << " opt_exact=" << (r.opt_exact ? 1 : 0) << " lp1=" << f6(r.lp1)
        << " lp2=" << f6(r.lp2) << " gap1=" << f6(r.gap1) << " gap2=" << f6(r.gap2);
    return out.str();
}

} // namespace labelcut
