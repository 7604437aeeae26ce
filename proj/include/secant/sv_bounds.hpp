#pragma once

#include <optional>

#include <gmpxx.h>

#include "secant/polytope.hpp"
#include "secant/sv_shape.hpp"

namespace secant {

/// Index j maximizing n_i/d_i (exact comparison, ties to smallest index).
int dominant_factor(const SvShape& shape);

/// Exact value of the closed-form non-defectiveness bound
///   (d_j/(n_j+d_j)) * (1/(1+sum n_i)) * prod C(n_i+d_i, d_i).
mpq_class nondefective_bound_exact(const SvShape& shape);

/// Floor of the closed-form bound: the variety is not h-defective for any
/// h up to this value.
long long nondefective_bound(const SvShape& shape);

/// (h-1)-identifiability bound: present when 2*sum(n_i) is strictly below
/// the exact bound value; equals nondefective_bound(shape) - 1.
std::optional<long long> identifiability_bound(const SvShape& shape);

struct HyperplaneBound {
    long long value;
    /// true when the facet-maximum equals the hyperplane-section maximum by
    /// the verified coordinate-functional argument (product polytopes);
    /// heuristic otherwise.
    bool proof_grade;
};

/// floor((|P cap M| - m) / (n+1)) with m the maximum facet point count.
HyperplaneBound hyperplane_bound(const Polytope& p);

/// expdim Sec_h = min(h*(n+1) - 1, N) with n = sum n_i, N+1 = |P cap M|.
long long expected_secant_dim(const SvShape& shape, long long h);

/// Least h whose expected secant dimension fills the ambient space.
long long generic_rank(const SvShape& shape);

} // namespace secant
