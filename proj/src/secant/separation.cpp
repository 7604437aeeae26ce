#include "secant/separation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "secant/errors.hpp"
#include "secant/int_matrix.hpp"
#include "secant/rng.hpp"

namespace secant {

namespace {

std::string fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return msg;
}

// indices of s sorted by decreasing phi_v, ties broken lexicographically
// (ties cannot occur for injective v; the tiebreak pins determinism anyway)
std::vector<int> sorted_by_value(const Functional& v, const PointSet& s) {
    std::vector<Coord> vals = v.values_on(s);
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::size_t ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
        if (vals[ua] != vals[ub]) return vals[ua] > vals[ub];
        return s[ua] < s[ub];
    });
    return order;
}

} // namespace

std::vector<int> greedy_simplex(const Functional& v, const PointSet& s) {
    const int n = s.ambient_dim();
    if (!v.injective_on(s))
        throw std::invalid_argument(
            "greedy_simplex: functional is not injective on S; re-draw v");

    const std::vector<int> order = sorted_by_value(v, s);
    AffineIndependenceTester tester(n);
    std::vector<int> chosen;
    for (int i : order) {
        if (tester.add(s[static_cast<std::size_t>(i)])) {
            chosen.push_back(i);
            if (static_cast<int>(chosen.size()) == n + 1) return chosen;
        }
    }
    return {};  // s is not full-dimensional: no simplex exists
}

bool separates(const Functional& v, const PointSet& delta, const PointSet& s) {
    const int n = s.ambient_dim();
    if (delta.ambient_dim() != n)
        throw std::invalid_argument("separates: dimension mismatch");
    if (static_cast<int>(delta.size()) != n + 1 || affine_dim(delta) != n)
        throw std::invalid_argument("separates: delta is not a full simplex");
    for (std::size_t i = 0; i < delta.size(); ++i)
        if (!s.contains(delta[i]))
            throw std::invalid_argument("separates: delta is not contained in S");

    std::vector<int> g = greedy_simplex(v, s);  // checks injectivity
    if (g.empty()) return false;

    std::set<Point> a, b;
    for (int i : g) a.insert(s[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < delta.size(); ++i) b.insert(delta[i]);
    return a == b;
}

bool separates_brute_force(const Functional& v, const PointSet& delta,
                           const PointSet& s) {
    if (s.size() > 12)
        throw ResourceLimitError("separates_brute_force: |S| > 12");
    const int n = s.ambient_dim();
    if (static_cast<int>(delta.size()) != n + 1 || affine_dim(delta) != n)
        throw std::invalid_argument("separates: delta is not a full simplex");
    if (!v.injective_on(s))
        throw std::invalid_argument(
            "separates: functional is not injective on S; re-draw v");

    std::vector<Coord> vals = v.values_on(s);
    Coord delta_sum = 0;
    std::vector<int> delta_idx;
    for (std::size_t i = 0; i < delta.size(); ++i) {
        auto at = s.index_of(delta[i]);
        if (!at)
            throw std::invalid_argument("separates: delta is not contained in S");
        delta_idx.push_back(static_cast<int>(*at));
        delta_sum += vals[*at];
    }
    std::sort(delta_idx.begin(), delta_idx.end());

    // compare sums of phi_v over all simplices; dividing by n+1 is a common
    // positive factor and does not change the comparison
    const std::size_t k = static_cast<std::size_t>(n) + 1;
    if (s.size() < k) return true;
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    const int m = static_cast<int>(s.size());

    for (;;) {
        if (idx != delta_idx) {
            AffineIndependenceTester tester(n);
            bool independent = true;
            for (int i : idx)
                if (!tester.add(s[static_cast<std::size_t>(i)])) {
                    independent = false;
                    break;
                }
            if (independent) {
                Coord sum = 0;
                for (int i : idx) sum += vals[static_cast<std::size_t>(i)];
                if (sum >= delta_sum) return false;
            }
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
    return true;
}

SeparationCertificate greedy_extract(const PointSet& s, std::uint64_t seed) {
    if (s.empty()) throw std::invalid_argument("greedy_extract: empty set");
    const int n = s.ambient_dim();

    SeparationCertificate cert;
    cert.source = s;
    cert.seed = seed;

    Rng rng(splitmix64(seed));
    const Coord range = std::max<Coord>(1, s.coordinate_range());
    const Coord bound = 4 * static_cast<Coord>(s.size()) * range;

    std::vector<int> remaining(s.size());
    std::iota(remaining.begin(), remaining.end(), 0);

    for (;;) {
        PointSet rem = s.subset(remaining);
        if (rem.empty() || affine_dim(rem) < n) break;

        Functional v;
        for (;;) {
            std::vector<Coord> coords(static_cast<std::size_t>(n));
            for (int d = 0; d < n; ++d)
                coords[static_cast<std::size_t>(d)] = rng.between(-bound, bound);
            v = Functional(std::move(coords));
            if (!v.injective_on(rem)) continue;
            bool fresh = true;
            for (const Functional& u : cert.functionals)
                if (u == v) fresh = false;
            if (fresh) break;
        }

        std::vector<int> local = greedy_simplex(v, rem);
        std::vector<int> global;
        for (int i : local)
            global.push_back(remaining[static_cast<std::size_t>(i)]);
        std::sort(global.begin(), global.end());

        cert.simplices.push_back(global);
        cert.functionals.push_back(v);

        std::vector<int> next;
        std::set<int> used(global.begin(), global.end());
        for (int i : remaining)
            if (!used.count(i)) next.push_back(i);
        remaining = std::move(next);
    }

    cert.leftover = remaining;
    cert.leftover_affinely_independent =
        remaining.empty() || affinely_independent(s.subset(remaining));
    return cert;
}

bool verify_certificate(const SeparationCertificate& c, std::string* why) {
    const int n = c.source.ambient_dim();
    const std::size_t npts = c.source.size();

    if (c.functionals.size() != c.simplices.size()) {
        fail(why, "functional count differs from simplex count");
        return false;
    }
    for (std::size_t i = 0; i < c.functionals.size(); ++i)
        for (std::size_t j = i + 1; j < c.functionals.size(); ++j)
            if (c.functionals[i] == c.functionals[j]) {
                fail(why, "functionals are not distinct");
                return false;
            }

    std::vector<char> used(npts, 0);
    for (const std::vector<int>& simplex : c.simplices) {
        if (simplex.size() != static_cast<std::size_t>(n) + 1) {
            fail(why, "simplex has wrong cardinality");
            return false;
        }
        for (int i : simplex) {
            if (i < 0 || static_cast<std::size_t>(i) >= npts) {
                fail(why, "simplex index out of range");
                return false;
            }
            if (used[static_cast<std::size_t>(i)]) {
                fail(why, "simplices are not pairwise disjoint");
                return false;
            }
            used[static_cast<std::size_t>(i)] = 1;
        }
        if (affine_dim(c.source.subset(simplex)) != n) {
            fail(why, "simplex is not full-dimensional");
            return false;
        }
    }

    std::vector<int> expected_leftover;
    for (std::size_t i = 0; i < npts; ++i)
        if (!used[i]) expected_leftover.push_back(static_cast<int>(i));
    std::vector<int> leftover = c.leftover;
    std::sort(leftover.begin(), leftover.end());
    if (leftover != expected_leftover) {
        fail(why, "leftover does not match source minus simplices");
        return false;
    }
    const bool indep =
        leftover.empty() || affinely_independent(c.source.subset(leftover));
    if (indep != c.leftover_affinely_independent) {
        fail(why, "leftover independence flag is wrong");
        return false;
    }

    // separation: v_i must separate Delta_i inside everything not yet removed
    std::vector<int> live(npts);
    std::iota(live.begin(), live.end(), 0);
    for (std::size_t step = 0; step < c.simplices.size(); ++step) {
        PointSet rest = c.source.subset(live);
        PointSet delta = c.source.subset(c.simplices[step]);
        try {
            if (!separates(c.functionals[step], delta, rest)) {
                fail(why, "functional does not separate its simplex");
                return false;
            }
        } catch (const std::invalid_argument& e) {
            fail(why, e.what());
            return false;
        }
        std::set<int> gone(c.simplices[step].begin(), c.simplices[step].end());
        std::vector<int> next;
        for (int i : live)
            if (!gone.count(i)) next.push_back(i);
        live = std::move(next);
    }
    return true;
}

NonDefectivenessResult certify_non_defective(const Polytope& p, int runs,
                                             std::uint64_t seed) {
    if (runs < 1) throw std::invalid_argument("certify_non_defective: runs < 1");
    if (!p.full_dimensional())
        throw std::invalid_argument("certify_non_defective: degenerate polytope");

    NonDefectivenessResult res;
    res.runs = runs;
    bool have = false;
    for (int r = 0; r < runs; ++r) {
        SeparationCertificate cert =
            greedy_extract(p.lattice_points(), derive_seed(seed, static_cast<std::uint64_t>(r)));
        res.best_k = std::max(res.best_k, cert.k());
        res.complete = res.complete || cert.complete();
        const bool better =
            !have ||
            (cert.complete() && !res.best.complete()) ||
            (cert.complete() == res.best.complete() && cert.k() > res.best.k());
        if (better) {
            res.best = cert;
            have = true;
        }
    }
    return res;
}

} // namespace secant
