#pragma once

#include <vector>

#include <gmpxx.h>

#include "secant/point_set.hpp"

namespace secant {

/// Exact feasibility of { lambda >= 0 : A lambda = b } by phase-1 simplex
/// with Bland's rule (terminates, no cycling, no rounding).
bool lp_feasible(const std::vector<std::vector<mpq_class>>& A,
                 const std::vector<mpq_class>& b);

/// Is q a convex combination of the given points?
bool in_convex_hull(const std::vector<std::vector<mpq_class>>& points,
                    const std::vector<mpq_class>& q);
bool in_convex_hull(const std::vector<Point>& points, const Point& q);

/// For each point, whether it is a vertex of the convex hull of the cloud
/// (i.e. not in the hull of the other points). Points must be distinct.
std::vector<bool> hull_vertex_mask(const std::vector<Point>& points);

} // namespace secant
