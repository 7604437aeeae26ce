#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "secant/point_set.hpp"

namespace secant {

/// Dense matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> e_;
};

/// Rank over Q via fraction-free (Bareiss) elimination. Deterministic.
std::size_t rank_exact(const IntMatrix& m);

/// Dimension of the affine span of s: rank of the rows (1, p) minus one.
/// Throws std::invalid_argument on an empty set.
int affine_dim(const PointSet& s);

/// Incremental affine-independence tester over a growing set, fraction-free.
/// Feeds the greedy simplex extraction where the same prefix is extended
/// point by point.
class AffineIndependenceTester {
public:
    explicit AffineIndependenceTester(int ambient_dim);

    /// Would adding p keep the set affinely independent?
    bool test(const Point& p) const;
    /// Add p; returns false (and leaves the state unchanged) if dependent.
    bool add(const Point& p);

    std::size_t size() const { return count_; }
    /// Affine dimension of the points added so far (-1 when empty).
    int dim() const { return static_cast<int>(count_) - 1; }

private:
    // rows are reduced differences (p - base); echelon by pivot column
    bool reduce(std::vector<mpz_class>& row) const;

    int n_;
    std::size_t count_;
    Point base_;
    std::vector<std::vector<mpz_class>> rows_;
    std::vector<int> pivot_col_;
};

/// True when the points of s are affinely independent (includes empty s).
bool affinely_independent(const PointSet& s);

} // namespace secant
