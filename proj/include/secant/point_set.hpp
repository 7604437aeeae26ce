#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace secant {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

/// Ordered, duplicate-free list of integer lattice points in Z^n.
class PointSet {
public:
    PointSet() : ambient_dim_(0) {}

    /// Throws std::invalid_argument on dimension mismatch or duplicates.
    PointSet(int ambient_dim, std::vector<Point> points);

    int ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

    std::optional<std::size_t> index_of(const Point& p) const;
    bool contains(const Point& p) const { return index_of(p).has_value(); }

    /// Subset by indices, preserving the given order.
    PointSet subset(const std::vector<int>& indices) const;

    /// Same points in lexicographic order.
    PointSet sorted_lex() const;

    /// max over coordinates of (max - min); 0 for <= 1 point.
    Coord coordinate_range() const;

    bool operator==(const PointSet& o) const {
        return ambient_dim_ == o.ambient_dim_ && points_ == o.points_;
    }

private:
    int ambient_dim_;
    std::vector<Point> points_;
};

/// Integer linear form <., v> on the lattice.
class Functional {
public:
    Functional() = default;
    explicit Functional(std::vector<Coord> v) : v_(std::move(v)) {}

    const std::vector<Coord>& coords() const { return v_; }
    std::size_t dim() const { return v_.size(); }

    Coord eval(const Point& p) const;
    std::vector<Coord> values_on(const PointSet& s) const;
    bool injective_on(const PointSet& s) const;

    bool operator==(const Functional& o) const { return v_ == o.v_; }

private:
    std::vector<Coord> v_;
};

std::string to_string(const Point& p);

} // namespace secant
