#include "secant/sv_bounds.hpp"

#include <stdexcept>

#include "secant/errors.hpp"

namespace secant {

int dominant_factor(const SvShape& shape) {
    int j = 0;
    for (int i = 1; i < shape.factors(); ++i) {
        // n_i/d_i > n_j/d_j  <=>  n_i * d_j > n_j * d_i
        const long lhs = static_cast<long>(shape.dims[static_cast<std::size_t>(i)]) *
                         shape.degs[static_cast<std::size_t>(j)];
        const long rhs = static_cast<long>(shape.dims[static_cast<std::size_t>(j)]) *
                         shape.degs[static_cast<std::size_t>(i)];
        if (lhs > rhs) j = i;
    }
    return j;
}

mpq_class nondefective_bound_exact(const SvShape& shape) {
    const int j = dominant_factor(shape);
    const long nj = shape.dims[static_cast<std::size_t>(j)];
    const long dj = shape.degs[static_cast<std::size_t>(j)];
    mpq_class v(shape.lattice_point_count());
    v *= mpq_class(dj, nj + dj);
    v /= 1 + shape.total_dim();
    v.canonicalize();
    return v;
}

long long nondefective_bound(const SvShape& shape) {
    mpq_class v = nondefective_bound_exact(shape);
    mpz_class fl = v.get_num() / v.get_den();  // exact values stay exact
    if (!fl.fits_slong_p())
        throw ResourceLimitError("nondefective_bound: value exceeds machine range");
    return fl.get_si();
}

std::optional<long long> identifiability_bound(const SvShape& shape) {
    const mpq_class v = nondefective_bound_exact(shape);
    if (mpq_class(2 * shape.total_dim()) < v)
        return nondefective_bound(shape) - 1;
    return std::nullopt;
}

HyperplaneBound hyperplane_bound(const Polytope& p) {
    const long long m = max_facet_points(p);
    const long long pts = static_cast<long long>(p.lattice_points().size());
    const long long n = p.dim();
    return HyperplaneBound{
        (pts - m) / (n + 1),
        p.provenance() == Polytope::Provenance::product_of_simplices};
}

long long expected_secant_dim(const SvShape& shape, long long h) {
    if (h < 1) throw std::invalid_argument("expected_secant_dim: h < 1");
    const mpz_class count = shape.lattice_point_count();
    if (!count.fits_slong_p())
        throw ResourceLimitError("expected_secant_dim: shape too large");
    const long long N = count.get_si() - 1;
    const long long n = shape.total_dim();
    if (h > (N / (n + 1)) + 1) return N;  // avoid overflow for silly h
    return std::min(h * (n + 1) - 1, N);
}

long long generic_rank(const SvShape& shape) {
    const mpz_class count = shape.lattice_point_count();
    if (!count.fits_slong_p())
        throw ResourceLimitError("generic_rank: shape too large");
    const long long np1 = count.get_si();
    const long long n = shape.total_dim();
    return (np1 + n) / (n + 1);  // ceil((N+1)/(n+1))
}

} // namespace secant
