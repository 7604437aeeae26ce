#pragma once

#include <vector>

#include "secant/point_set.hpp"

namespace secant {

/// Barycentric polytope B(S): convex hull of the barycenters of all full
/// simplices contained in S. Barycenters are stored as their coordinate
/// sums; the common denominator is n+1.
struct BarycentricPolytope {
    int denominator = 0;
    /// distinct coordinate sums sum_{p in Delta} p, lex sorted
    std::vector<Point> barycenter_sums;
    /// how many simplices achieve each barycenter
    std::vector<long long> multiplicity;
    /// indices into barycenter_sums that are vertices of B(S)
    std::vector<int> vertex_indices;

    bool is_vertex(std::size_t i) const;
    long long simplex_count() const;
    /// barycenters achieved by >= 2 simplices
    std::vector<std::size_t> shared() const;
};

/// Brute force over all (n+1)-subsets; |s| <= 16.
BarycentricPolytope barycentric_polytope(const PointSet& s);

/// Multiplicity enumeration only (no hull vertex computation); used where
/// only the shared-barycenter structure matters.
BarycentricPolytope barycenter_multiplicities(const PointSet& s);

} // namespace secant
