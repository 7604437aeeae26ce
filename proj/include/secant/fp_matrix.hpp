#pragma once

#include <cstdint>
#include <vector>

#include "secant/int_matrix.hpp"
#include "secant/prime_field.hpp"

namespace secant {

/// Dense matrix over F_p (p < 2^31), entries stored canonically in [0, p).
/// Elimination runs on the dispatched fp kernels.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, const PrimeField& f)
        : rows_(rows), cols_(cols), p_(f.p()), e_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t p() const { return p_; }

    std::uint64_t& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }
    std::uint64_t* row(std::size_t i) { return e_.data() + i * cols_; }
    const std::uint64_t* row(std::size_t i) const {
        return e_.data() + i * cols_;
    }

    void append_rows(const FpMatrix& other);

    std::size_t rank() const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

    FpMatrix transposed() const;

    /// Basis of { x : M x = 0 }, each vector of length cols().
    std::vector<std::vector<std::uint64_t>> right_nullspace() const;
    /// Basis of { y : y^T M = 0 }, each vector of length rows().
    std::vector<std::vector<std::uint64_t>> left_nullspace() const;

private:
    std::size_t rows_, cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> e_;
};

/// Rank of an integer matrix reduced mod p; never exceeds rank_exact(m).
std::size_t rank_mod_p(const IntMatrix& m, const PrimeField& f);

} // namespace secant
