#include "secant/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "secant/errors.hpp"
#include "secant/int_matrix.hpp"
#include "secant/lp.hpp"

namespace secant {

SvShape::SvShape(std::vector<int> n, std::vector<int> d)
    : dims(std::move(n)), degs(std::move(d)) {
    if (dims.empty() || dims.size() != degs.size())
        throw std::invalid_argument("SvShape: need matching nonempty dims/degs");
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] < 1 || degs[i] < 1)
            throw std::invalid_argument("SvShape: all n_i, d_i must be >= 1");
}

long SvShape::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0L);
}

mpz_class SvShape::lattice_point_count() const {
    mpz_class c = 1;
    for (std::size_t i = 0; i < dims.size(); ++i)
        c *= binomial(dims[i] + degs[i], degs[i]);
    return c;
}

std::string SvShape::to_string() const {
    std::ostringstream os;
    os << "SV^(";
    for (std::size_t i = 0; i < dims.size(); ++i)
        os << (i ? "," : "") << dims[i];
    os << ")_(";
    for (std::size_t i = 0; i < degs.size(); ++i)
        os << (i ? "," : "") << degs[i];
    os << ")";
    return os.str();
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad integer list: '" + s + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

Polytope::Polytope(PointSet vertices, PointSet lattice_points, Provenance prov,
                   std::optional<SvShape> shape)
    : vertices_(std::move(vertices)),
      lattice_points_(std::move(lattice_points)),
      provenance_(prov),
      shape_(std::move(shape)) {
    if (vertices_.empty())
        throw std::invalid_argument("Polytope: no vertices");
    if (vertices_.ambient_dim() != lattice_points_.ambient_dim())
        throw std::invalid_argument("Polytope: dimension mismatch");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!lattice_points_.contains(vertices_[i]))
            throw std::invalid_argument("Polytope: vertex missing from lattice points");
    dim_ = affine_dim(lattice_points_);
    if (dim_ != affine_dim(vertices_))
        throw std::invalid_argument("Polytope: lattice points span more than vertices");
}

namespace {

// lattice points of d * Delta^n, lex sorted
std::vector<Point> dilated_simplex_points(int n, int d) {
    std::vector<Point> out;
    Point cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Polytope product_simplex_points(const SvShape& shape) {
    const int r = shape.factors();
    std::vector<std::vector<Point>> factor_pts(static_cast<std::size_t>(r));
    std::vector<std::vector<Point>> factor_verts(static_cast<std::size_t>(r));
    int n_total = 0;
    for (int i = 0; i < r; ++i) {
        const int n = shape.dims[static_cast<std::size_t>(i)];
        const int d = shape.degs[static_cast<std::size_t>(i)];
        factor_pts[static_cast<std::size_t>(i)] = dilated_simplex_points(n, d);
        std::vector<Point>& vs = factor_verts[static_cast<std::size_t>(i)];
        vs.emplace_back(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            Point v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(j)] = d;
            vs.push_back(std::move(v));
        }
        n_total += n;
    }

    const mpz_class count = shape.lattice_point_count();
    if (count > 2'000'000)
        throw ResourceLimitError("product_simplex_points: " + count.get_str() +
                                 " lattice points exceeds the desk-scale limit");

    auto cartesian = [n_total](const std::vector<std::vector<Point>>& factors) {
        std::vector<Point> out;
        std::vector<std::size_t> idx(factors.size(), 0);
        for (;;) {
            Point p;
            p.reserve(static_cast<std::size_t>(n_total));
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const Point& f = factors[i][idx[i]];
                p.insert(p.end(), f.begin(), f.end());
            }
            out.push_back(std::move(p));
            std::size_t i = factors.size();
            while (i > 0) {
                --i;
                if (++idx[i] < factors[i].size()) break;
                idx[i] = 0;
                if (i == 0) return out;
            }
        }
    };

    std::vector<Point> pts = cartesian(factor_pts);
    std::sort(pts.begin(), pts.end());
    std::vector<Point> verts = cartesian(factor_verts);
    std::sort(verts.begin(), verts.end());
    return Polytope(PointSet(n_total, std::move(verts)),
                    PointSet(n_total, std::move(pts)),
                    Polytope::Provenance::product_of_simplices, shape);
}

Polytope lattice_points_from_vertices(const PointSet& vertices) {
    if (vertices.empty())
        throw std::invalid_argument("lattice_points_from_vertices: no vertices");
    const int n = vertices.ambient_dim();
    if (n > 6)
        throw ResourceLimitError(
            "lattice_points_from_vertices: ambient dimension > 6");

    Point lo = vertices[0], hi = vertices[0];
    for (std::size_t i = 1; i < vertices.size(); ++i)
        for (int d = 0; d < n; ++d) {
            lo[static_cast<std::size_t>(d)] =
                std::min(lo[static_cast<std::size_t>(d)], vertices[i][static_cast<std::size_t>(d)]);
            hi[static_cast<std::size_t>(d)] =
                std::max(hi[static_cast<std::size_t>(d)], vertices[i][static_cast<std::size_t>(d)]);
        }

    mpz_class box = 1;
    for (int d = 0; d < n; ++d)
        box *= mpz_class(hi[static_cast<std::size_t>(d)] - lo[static_cast<std::size_t>(d)] + 1);
    if (box > 2'000'000)
        throw ResourceLimitError("lattice_points_from_vertices: bounding box of " +
                                 box.get_str() + " candidates");

    std::vector<Point> pts;
    Point cur = lo;
    for (;;) {
        if (in_convex_hull(vertices.points(), cur)) pts.push_back(cur);
        int d = n - 1;
        for (; d >= 0; --d) {
            if (cur[static_cast<std::size_t>(d)] < hi[static_cast<std::size_t>(d)]) {
                ++cur[static_cast<std::size_t>(d)];
                for (int j = d + 1; j < n; ++j)
                    cur[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
                break;
            }
        }
        if (d < 0) break;
    }
    std::sort(pts.begin(), pts.end());
    return Polytope(vertices.sorted_lex(), PointSet(n, std::move(pts)),
                    Polytope::Provenance::user);
}

namespace {

// integer normal of the hyperplane through n affinely independent points,
// via cofactor expansion of the (n-1) x n difference matrix
std::optional<Point> hyperplane_normal(const std::vector<Point>& pts) {
    const std::size_t n = pts[0].size();
    std::vector<std::vector<mpz_class>> diff(n - 1, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            diff[i][j] = pts[i + 1][j] - pts[0][j];

    auto det = [](std::vector<std::vector<mpz_class>> a) -> mpz_class {
        const std::size_t k = a.size();
        mpz_class prev = 1, t;
        int sign = 1;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            while (piv < k && a[piv][col] == 0) ++piv;
            if (piv == k) return 0;
            if (piv != col) {
                std::swap(a[piv], a[col]);
                sign = -sign;
            }
            for (std::size_t i = col + 1; i < k; ++i) {
                for (std::size_t j = col + 1; j < k; ++j) {
                    t = a[i][j] * a[col][col] - a[i][col] * a[col][j];
                    mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                                 prev.get_mpz_t());
                }
                a[i][col] = 0;
            }
            prev = a[col][col];
        }
        return sign * a[k - 1][k - 1];
    };

    std::vector<mpz_class> w(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<mpz_class>> minor(n - 1,
                                                  std::vector<mpz_class>(n - 1));
        for (std::size_t i = 0; i < n - 1; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[i][cc++] = diff[i][c];
            }
        }
        w[j] = (j % 2 ? -1 : 1) * det(minor);
        if (w[j] != 0) nonzero = true;
    }
    if (!nonzero) return std::nullopt;

    mpz_class g = 0;
    for (const mpz_class& x : w) g = gcd(g, x);
    Point out(n);
    for (std::size_t j = 0; j < n; ++j) {
        mpz_class q = w[j] / g;
        if (!q.fits_slong_p())
            throw ResourceLimitError("facet normal exceeds machine range");
        out[j] = q.get_si();
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (out[j] != 0) {
            if (out[j] < 0)
                for (std::size_t i = 0; i < n; ++i) out[i] = -out[i];
            break;
        }
    }
    return out;
}

} // namespace

std::vector<Facet> enumerate_facets(const Polytope& p) {
    if (!p.full_dimensional())
        throw std::invalid_argument("enumerate_facets: polytope is degenerate");
    const int n = p.ambient_dim();
    const PointSet& verts = p.vertices();
    const PointSet& pts = p.lattice_points();
    if (n < 1) throw std::invalid_argument("enumerate_facets: dimension 0");

    const mpz_class cand = binomial(static_cast<long>(verts.size()), n);
    if (cand > 500'000)
        throw ResourceLimitError("enumerate_facets: too many candidate hyperplanes");

    std::set<std::pair<Point, Coord>> seen;
    std::vector<Facet> facets;

    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(verts.size());
    if (m < n) return facets;

    for (;;) {
        std::vector<Point> chosen;
        chosen.reserve(static_cast<std::size_t>(n));
        for (int i : idx) chosen.push_back(verts[static_cast<std::size_t>(i)]);

        if (auto w = hyperplane_normal(chosen)) {
            Functional f(*w);
            const Coord c = f.eval(chosen[0]);
            if (seen.insert({*w, c}).second) {
                bool any_pos = false, any_neg = false;
                std::vector<int> on;
                for (std::size_t q = 0; q < pts.size(); ++q) {
                    const Coord s = f.eval(pts[q]) - c;
                    if (s > 0) any_pos = true;
                    else if (s < 0) any_neg = true;
                    else on.push_back(static_cast<int>(q));
                    if (any_pos && any_neg) break;
                }
                if (!(any_pos && any_neg))
                    facets.push_back(Facet{*w, c, std::move(on)});
            }
        }

        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return facets;
}

mpz_class product_facet_points(const SvShape& shape, int j) {
    mpz_class f = binomial(shape.degs[static_cast<std::size_t>(j)] +
                               shape.dims[static_cast<std::size_t>(j)] - 1,
                           shape.degs[static_cast<std::size_t>(j)]);
    for (int i = 0; i < shape.factors(); ++i) {
        if (i == j) continue;
        f *= binomial(shape.dims[static_cast<std::size_t>(i)] +
                          shape.degs[static_cast<std::size_t>(i)],
                      shape.degs[static_cast<std::size_t>(i)]);
    }
    return f;
}

long long max_facet_points(const Polytope& p) {
    if (!p.full_dimensional())
        throw std::invalid_argument("max_facet_points: polytope is degenerate");

    if (p.provenance() == Polytope::Provenance::product_of_simplices &&
        p.shape()) {
        const SvShape& sh = *p.shape();
        mpz_class best = 0;
        for (int j = 0; j < sh.factors(); ++j)
            best = std::max(best, product_facet_points(sh, j));
        if (!best.fits_slong_p())
            throw ResourceLimitError("max_facet_points: count exceeds machine range");
        return best.get_si();
    }

    long long best = 0;
    for (const Facet& f : enumerate_facets(p))
        best = std::max(best, static_cast<long long>(f.on.size()));
    return best;
}

} // namespace secant
