#include "secant/point_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace secant {

PointSet::PointSet(int ambient_dim, std::vector<Point> points)
    : ambient_dim_(ambient_dim), points_(std::move(points)) {
    if (ambient_dim < 0)
        throw std::invalid_argument("PointSet: negative ambient dimension");
    std::set<Point> seen;
    for (const Point& p : points_) {
        if (static_cast<int>(p.size()) != ambient_dim_)
            throw std::invalid_argument("PointSet: point has wrong dimension");
        if (!seen.insert(p).second)
            throw std::invalid_argument("PointSet: duplicate point " + to_string(p));
    }
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == p) return i;
    return std::nullopt;
}

PointSet PointSet::subset(const std::vector<int>& indices) const {
    std::vector<Point> pts;
    pts.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= points_.size())
            throw std::invalid_argument("PointSet::subset: index out of range");
        pts.push_back(points_[static_cast<std::size_t>(i)]);
    }
    return PointSet(ambient_dim_, std::move(pts));
}

PointSet PointSet::sorted_lex() const {
    std::vector<Point> pts = points_;
    std::sort(pts.begin(), pts.end());
    return PointSet(ambient_dim_, std::move(pts));
}

Coord PointSet::coordinate_range() const {
    Coord best = 0;
    for (int d = 0; d < ambient_dim_; ++d) {
        Coord lo = 0, hi = 0;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            Coord c = points_[i][static_cast<std::size_t>(d)];
            if (i == 0) {
                lo = hi = c;
            } else {
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
        }
        best = std::max(best, hi - lo);
    }
    return best;
}

Coord Functional::eval(const Point& p) const {
    if (p.size() != v_.size())
        throw std::invalid_argument("Functional::eval: dimension mismatch");
    Coord s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * p[i];
    return s;
}

std::vector<Coord> Functional::values_on(const PointSet& s) const {
    std::vector<Coord> vals;
    vals.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) vals.push_back(eval(s[i]));
    return vals;
}

bool Functional::injective_on(const PointSet& s) const {
    std::vector<Coord> vals = values_on(s);
    std::sort(vals.begin(), vals.end());
    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

} // namespace secant
