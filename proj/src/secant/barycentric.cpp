#include "secant/barycentric.hpp"

#include <algorithm>
#include <map>

#include "secant/errors.hpp"
#include "secant/int_matrix.hpp"
#include "secant/lp.hpp"

namespace secant {

bool BarycentricPolytope::is_vertex(std::size_t i) const {
    return std::find(vertex_indices.begin(), vertex_indices.end(),
                     static_cast<int>(i)) != vertex_indices.end();
}

long long BarycentricPolytope::simplex_count() const {
    long long c = 0;
    for (long long m : multiplicity) c += m;
    return c;
}

std::vector<std::size_t> BarycentricPolytope::shared() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < multiplicity.size(); ++i)
        if (multiplicity[i] >= 2) out.push_back(i);
    return out;
}

BarycentricPolytope barycenter_multiplicities(const PointSet& s) {
    if (s.size() > 16)
        throw ResourceLimitError("barycentric_polytope: |S| > 16");
    const int n = s.ambient_dim();
    const std::size_t k = static_cast<std::size_t>(n) + 1;

    BarycentricPolytope out;
    out.denominator = n + 1;
    if (s.size() < k) return out;

    std::map<Point, long long> mult;
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    const int m = static_cast<int>(s.size());

    for (;;) {
        AffineIndependenceTester tester(n);
        bool independent = true;
        for (int i : idx)
            if (!tester.add(s[static_cast<std::size_t>(i)])) {
                independent = false;
                break;
            }
        if (independent) {
            Point sum(static_cast<std::size_t>(n), 0);
            for (int i : idx)
                for (int d = 0; d < n; ++d)
                    sum[static_cast<std::size_t>(d)] +=
                        s[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
            ++mult[sum];
        }

        int i = static_cast<int>(k) - 1;
        while (i >= 0 &&
               idx[static_cast<std::size_t>(i)] == m - static_cast<int>(k) + i)
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }

    for (auto& [sum, count] : mult) {
        out.barycenter_sums.push_back(sum);
        out.multiplicity.push_back(count);
    }
    return out;
}

BarycentricPolytope barycentric_polytope(const PointSet& s) {
    BarycentricPolytope out = barycenter_multiplicities(s);
    // scaling by the common denominator n+1 does not change which points
    // are hull vertices
    const std::vector<bool> mask = hull_vertex_mask(out.barycenter_sums);
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.vertex_indices.push_back(static_cast<int>(i));
    return out;
}

} // namespace secant
