#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secant/separation.hpp"
#include "secant/sv_bounds.hpp"
#include "secant/terracini.hpp"

namespace secant {

struct TableSpec {
    std::vector<int> dims;
    int deg_min = 1;
    int deg_max = 1;
    long long deg_sum_max = -1;  ///< optional cap on d_1+...+d_r (-1: none)
    int runs = 5;                ///< separation attempts per cell
    int trials = 3;              ///< oracle trials per h
    int h_min = 1;
    int h_max = -1;              ///< -1: scan through the generic rank
    int jobs = 1;
    long long max_points = 20000;  ///< desk-scale guard per cell
};

/// The two-factor P^1 x P^2 scan matching the published session: degrees
/// d_1, d_2 in [1, 8], 5 separation runs, oracle as arbiter.
TableSpec p1p2_preset();

struct TableCell {
    SvShape shape;
    long long bound = 0;
    std::size_t sep_k = 0;
    bool sep_complete = false;
    std::uint64_t sep_seed = 0;
    DefectReport report;
    bool defective = false;      ///< any defective_evidence status
    bool has_unknown = false;
    bool contradiction = false;  ///< defective while separation certified
    std::vector<int> defective_h;
};

struct TableResult {
    TableSpec spec;
    std::uint64_t seed = 0;
    std::vector<TableCell> cells;

    std::vector<const TableCell*> defective_cells() const;
};

/// Scans every degree tuple in the spec's range; each cell gets the closed
/// form bound, a separation certificate attempt, and a full oracle report.
/// Cells run on a small worker pool (spec.jobs) with per-cell derived seeds,
/// so results are reproducible regardless of scheduling.
TableResult table_scan(const TableSpec& spec, std::uint64_t seed);

/// CSV with columns dims, degs, h, expected, computed, status, bound,
/// certificate_ref (one row per scanned h).
std::string to_csv(const TableResult& table);

} // namespace secant
