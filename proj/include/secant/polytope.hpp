#pragma once

#include <optional>
#include <vector>

#include "secant/point_set.hpp"
#include "secant/sv_shape.hpp"

namespace secant {

/// Supporting hyperplane <q, normal> = offset containing a facet.
struct Facet {
    Point normal;
    Coord offset;
    std::vector<int> on; // indices of lattice points on the facet
};

/// Lattice polytope with its full set of integer points (lex sorted).
class Polytope {
public:
    enum class Provenance { product_of_simplices, user };

    Polytope(PointSet vertices, PointSet lattice_points, Provenance prov,
             std::optional<SvShape> shape = std::nullopt);

    const PointSet& vertices() const { return vertices_; }
    const PointSet& lattice_points() const { return lattice_points_; }
    Provenance provenance() const { return provenance_; }
    const std::optional<SvShape>& shape() const { return shape_; }

    int ambient_dim() const { return lattice_points_.ambient_dim(); }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim(); }

private:
    PointSet vertices_;
    PointSet lattice_points_;
    Provenance provenance_;
    std::optional<SvShape> shape_;
    int dim_;
};

/// Product of dilated standard simplices Delta_{d_1}^{n_1} x ... with all
/// lattice points enumerated. Point count = prod C(n_i+d_i, d_i).
Polytope product_simplex_points(const SvShape& shape);

/// All integer points of conv(vertices) by bounding-box scan with exact
/// membership tests. Desk scale: ambient dimension <= 6.
Polytope lattice_points_from_vertices(const PointSet& vertices);

/// Brute-force facet enumeration through affinely independent vertex
/// subsets; full-dimensional polytopes only.
std::vector<Facet> enumerate_facets(const Polytope& p);

/// Maximum number of lattice points on a facet. Product polytopes use the
/// closed form C(d_j+n_j-1, d_j) * prod_{i != j} C(d_i+n_i, d_i) maximized
/// over j; everything else is enumerated.
long long max_facet_points(const Polytope& p);

/// Closed-form facet point count for factor j of a product shape.
mpz_class product_facet_points(const SvShape& shape, int j);

} // namespace secant
