#pragma once

#include "labelcut/exact.hpp"
#include "labelcut/generators.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace labelcut {

// One experiment row: instance sizes, exact optimum, both relaxation values
// and the resulting ratios.
struct GapRow {
    std::string instance_id;
    int k = 0, d = 0, h = 0;      // zero for the path family
    std::uint64_t seed = 0;
    int n = 0, m = 0, q = 0;
    int opt = 0;
    bool opt_exact = true;         // false: only OPT > opt is proven
    double lp1 = 0.0, lp2 = 0.0;
    double gap1 = 0.0, gap2 = 0.0; // opt / lp value; 0 when opt is not exact
    double t_opt_ms = 0.0, t_lp1_ms = 0.0, t_lp2_ms = 0.0;
};

struct GapGridSpec {
    bool path_family = false;
    std::vector<int> ms;                 // path family sizes
    std::vector<int> ks, ds, hs;         // gadget family grid
    std::vector<std::uint64_t> seeds;    // gadget family seeds
    std::optional<int> cap;              // exhaustive fallback cap
    bool timings = false;                // measured timings break reproducibility
    int jobs = 1;
};

GapRow compute_gap_row_path(int m, bool timings);
GapRow compute_gap_row_gadget(const GadgetParams& params, std::optional<int> cap, bool timings);

// Rows in deterministic grid order regardless of `jobs`.
std::vector<GapRow> run_gap_grid(const GapGridSpec& spec);

std::string gap_csv_header();
std::string to_csv_row(const GapRow& row);
std::string gap_rows_to_csv(const std::vector<GapRow>& rows);
std::string to_record(const GapRow& row);

} // namespace labelcut
