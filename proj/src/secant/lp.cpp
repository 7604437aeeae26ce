#include "secant/lp.hpp"

#include <stdexcept>

namespace secant {

bool lp_feasible(const std::vector<std::vector<mpq_class>>& A,
                 const std::vector<mpq_class>& b) {
    const std::size_t m = A.size();
    if (b.size() != m)
        throw std::invalid_argument("lp_feasible: rhs size mismatch");
    if (m == 0) return true;
    const std::size_t k = A[0].size();
    if (k == 0) {
        for (const mpq_class& v : b)
            if (v != 0) return false;
        return true;
    }

    // tableau: m rows, columns = k structural + m artificial + rhs
    const std::size_t ncols = k + m;
    std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(ncols + 1));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < k; ++j)
            t[i][j] = flip ? mpq_class(-A[i][j]) : A[i][j];
        t[i][k + i] = 1;
        t[i][ncols] = flip ? mpq_class(-b[i]) : b[i];
    }

    // objective: minimize the sum of artificials; with the artificial basis
    // the reduced cost of column j is -(sum of column j over all rows)
    std::vector<mpq_class> cost(ncols + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[ncols] -= t[i][ncols];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    for (;;) {
        // Bland: entering = smallest-index column with negative reduced cost
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == ncols) break;

        // ratio test; ties resolved by smallest basic-variable index
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            mpq_class ratio = t[i][ncols] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m)
            throw std::logic_error("lp_feasible: unbounded phase-1 problem");

        // pivot
        const mpq_class piv = t[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const mpq_class f = t[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j)
                t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const mpq_class f = cost[enter];
            for (std::size_t j = 0; j <= ncols; ++j)
                cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // feasible iff the artificial objective reaches zero
    return cost[ncols] == 0;
}

bool in_convex_hull(const std::vector<std::vector<mpq_class>>& points,
                    const std::vector<mpq_class>& q) {
    if (points.empty()) return false;
    const std::size_t dim = q.size();
    std::vector<std::vector<mpq_class>> A(dim + 1,
                                          std::vector<mpq_class>(points.size()));
    std::vector<mpq_class> b(dim + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim)
            throw std::invalid_argument("in_convex_hull: dimension mismatch");
        for (std::size_t d = 0; d < dim; ++d) A[d][i] = points[i][d];
        A[dim][i] = 1;
    }
    for (std::size_t d = 0; d < dim; ++d) b[d] = q[d];
    b[dim] = 1;
    return lp_feasible(A, b);
}

bool in_convex_hull(const std::vector<Point>& points, const Point& q) {
    std::vector<std::vector<mpq_class>> pts(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        pts[i].assign(points[i].begin(), points[i].end());
    std::vector<mpq_class> qq(q.begin(), q.end());
    return in_convex_hull(pts, qq);
}

std::vector<bool> hull_vertex_mask(const std::vector<Point>& points) {
    std::vector<bool> mask(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Point> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        mask[i] = !in_convex_hull(others, points[i]);
    }
    return mask;
}

} // namespace secant
