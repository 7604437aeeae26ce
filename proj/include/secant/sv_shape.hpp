#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace secant {

mpz_class binomial(long n, long k);

/// Dimensions (n_1..n_r) and degrees (d_1..d_r) of a Segre-Veronese product
/// P^{n_1} x ... x P^{n_r} embedded by O(d_1,...,d_r).
struct SvShape {
    std::vector<int> dims;
    std::vector<int> degs;

    SvShape() = default;
    SvShape(std::vector<int> n, std::vector<int> d);

    int factors() const { return static_cast<int>(dims.size()); }
    /// dim of the variety, sum of the n_i
    long total_dim() const;
    /// |P cap M| = prod C(n_i + d_i, d_i), the ambient dimension plus one
    mpz_class lattice_point_count() const;

    std::string to_string() const;
    bool operator==(const SvShape& o) const {
        return dims == o.dims && degs == o.degs;
    }
};

/// Parse "1,2,1" style integer lists (CLI shape arguments).
std::vector<int> parse_int_list(const std::string& s);

} // namespace secant
