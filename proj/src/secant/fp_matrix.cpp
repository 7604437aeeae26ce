#include "secant/fp_matrix.hpp"

#include <stdexcept>

#include "secant/fp_kernels.hpp"

namespace secant {

void FpMatrix::append_rows(const FpMatrix& other) {
    if (other.cols_ != cols_ || other.p_ != p_)
        throw std::invalid_argument("FpMatrix::append_rows: shape/field mismatch");
    e_.insert(e_.end(), other.e_.begin(), other.e_.end());
    rows_ += other.rows_;
}

std::size_t FpMatrix::rank() const {
    FpMatrix a(*this);
    const auto& k = fp::active();
    const PrimeField f(p_);

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && a.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = col; j < cols_; ++j)
                std::swap(a.at(r, j), a.at(piv, j));

        const std::uint64_t inv = f.inv(a.at(r, col));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            const std::uint64_t head = a.at(i, col);
            if (head == 0) continue;
            const std::uint64_t m = f.neg(f.mul(head, inv));
            k.axpy(a.row(i) + col, a.row(r) + col, cols_ - col, m, p_);
        }
        ++r;
    }
    return r;
}

std::vector<std::size_t> FpMatrix::rref() {
    const auto& k = fp::active();
    const PrimeField f(p_);
    std::vector<std::size_t> pivots;

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(r, j), at(piv, j));

        k.scale(row(r) + col, cols_ - col, f.inv(at(r, col)), p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const std::uint64_t head = at(i, col);
            if (head == 0) continue;
            k.axpy(row(i) + col, row(r) + col, cols_ - col, f.neg(head), p_);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(cols_, rows_, PrimeField(p_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<std::vector<std::uint64_t>> FpMatrix::right_nullspace() const {
    FpMatrix a(*this);
    const std::vector<std::size_t> pivots = a.rref();
    std::vector<char> is_pivot(cols_, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;

    const PrimeField f(p_);
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(a.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<std::uint64_t>> FpMatrix::left_nullspace() const {
    return transposed().right_nullspace();
}

std::size_t rank_mod_p(const IntMatrix& m, const PrimeField& f) {
    FpMatrix a(m.rows(), m.cols(), f);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a.at(i, j) = f.reduce(m.at(i, j));
    return a.rank();
}

} // namespace secant
