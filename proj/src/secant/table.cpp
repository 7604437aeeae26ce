#include "secant/table.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "secant/errors.hpp"
#include "secant/rng.hpp"

namespace secant {

TableSpec p1p2_preset() {
    TableSpec spec;
    spec.dims = {1, 2};
    spec.deg_min = 1;
    spec.deg_max = 8;
    spec.runs = 5;
    spec.trials = 3;
    return spec;
}

std::vector<const TableCell*> TableResult::defective_cells() const {
    std::vector<const TableCell*> out;
    for (const TableCell& c : cells)
        if (c.defective) out.push_back(&c);
    return out;
}

namespace {

std::vector<std::vector<int>> degree_tuples(const TableSpec& spec) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(spec.dims.size(), spec.deg_min);
    for (;;) {
        long long sum = 0;
        for (int d : cur) sum += d;
        if (spec.deg_sum_max < 0 || sum <= spec.deg_sum_max) out.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (++cur[i] <= spec.deg_max) break;
            cur[i] = spec.deg_min;
            if (i == 0) return out;
        }
    }
}

TableCell scan_cell(const TableSpec& spec, const std::vector<int>& degs,
                    std::uint64_t cell_seed) {
    TableCell cell;
    cell.shape = SvShape(spec.dims, degs);

    const mpz_class count = cell.shape.lattice_point_count();
    if (count > spec.max_points)
        throw ResourceLimitError("table_scan: cell " + cell.shape.to_string() +
                                 " has " + count.get_str() + " points");

    const Polytope poly = product_simplex_points(cell.shape);
    cell.bound = nondefective_bound(cell.shape);

    cell.sep_seed = derive_seed(cell_seed, 1);
    const NonDefectivenessResult sep =
        certify_non_defective(poly, spec.runs, cell.sep_seed);
    cell.sep_k = sep.best_k;
    cell.sep_complete = sep.complete;

    const long long hi =
        spec.h_max > 0 ? spec.h_max : generic_rank(cell.shape);
    OracleConfig cfg;
    cfg.trials = spec.trials;
    cfg.seed = derive_seed(cell_seed, 2);
    cell.report = defect_report(poly.lattice_points(), spec.h_min,
                                static_cast<int>(hi), cfg,
                                cell.shape.to_string());

    for (const DefectRow& row : cell.report.rows) {
        if (row.status == HStatus::defective_evidence) {
            cell.defective = true;
            cell.defective_h.push_back(row.h);
        } else if (row.status == HStatus::unknown) {
            cell.has_unknown = true;
        }
    }
    cell.contradiction = cell.defective && cell.sep_complete;
    return cell;
}

} // namespace

TableResult table_scan(const TableSpec& spec, std::uint64_t seed) {
    TableResult result;
    result.spec = spec;
    result.seed = seed;

    const std::vector<std::vector<int>> tuples = degree_tuples(spec);
    result.cells.resize(tuples.size());

    const int jobs = std::max(1, spec.jobs);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));

    auto worker = [&](int wid) {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tuples.size()) return;
                result.cells[i] =
                    scan_cell(spec, tuples[i], derive_seed(seed, i));
            }
        } catch (...) {
            errors[static_cast<std::size_t>(wid)] = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return result;
}

std::string to_csv(const TableResult& table) {
    std::ostringstream os;
    os << "dims,degs,h,expected,computed,status,bound,certificate_ref\n";
    auto join = [](const std::vector<int>& v) {
        std::ostringstream s;
        for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
        return s.str();
    };
    for (const TableCell& cell : table.cells) {
        std::ostringstream ref;
        ref << "sep:k=" << cell.sep_k
            << (cell.sep_complete ? ":complete" : ":incomplete") << ":seed=0x"
            << std::hex << cell.sep_seed;
        for (const DefectRow& row : cell.report.rows) {
            os << join(cell.shape.dims) << "," << join(cell.shape.degs) << ","
               << row.h << "," << row.expected << "," << row.computed << ","
               << to_string(row.status) << "," << cell.bound << ","
               << ref.str() << "\n";
        }
    }
    return os.str();
}

} // namespace secant
