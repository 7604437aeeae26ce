#include "secant/int_matrix.hpp"

#include <stdexcept>

namespace secant {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix: size mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

std::size_t rank_exact(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j);

    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& {
        return a[i * cols + j];
    };

    // Bareiss: divide by the previous pivot; entries stay integral because
    // every intermediate entry is a minor of the original matrix.
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(at(r, j), at(piv, j));

        const mpz_class pivot = at(r, col);
        mpz_class t;
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class head = at(i, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                t = at(i, j) * pivot - head * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

int affine_dim(const PointSet& s) {
    if (s.empty())
        throw std::invalid_argument("affine_dim: empty point set has no span");
    const std::size_t n = static_cast<std::size_t>(s.ambient_dim());
    IntMatrix m(s.size(), n + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        m.at(i, 0) = 1;
        for (std::size_t j = 0; j < n; ++j) m.at(i, j + 1) = s[i][j];
    }
    return static_cast<int>(rank_exact(m)) - 1;
}

AffineIndependenceTester::AffineIndependenceTester(int ambient_dim)
    : n_(ambient_dim), count_(0) {}

bool AffineIndependenceTester::reduce(std::vector<mpz_class>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int c = pivot_col_[k];
        if (row[static_cast<std::size_t>(c)] == 0) continue;
        const mpz_class piv = rows_[k][static_cast<std::size_t>(c)];
        const mpz_class head = row[static_cast<std::size_t>(c)];
        for (int j = 0; j < n_; ++j) {
            std::size_t ju = static_cast<std::size_t>(j);
            row[ju] = row[ju] * piv - head * rows_[k][ju];
        }
    }
    for (int j = 0; j < n_; ++j)
        if (row[static_cast<std::size_t>(j)] != 0) return true;
    return false;
}

bool AffineIndependenceTester::test(const Point& p) const {
    if (count_ == 0) return true;
    std::vector<mpz_class> row(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j)
        row[static_cast<std::size_t>(j)] =
            p[static_cast<std::size_t>(j)] - base_[static_cast<std::size_t>(j)];
    return reduce(row);
}

bool AffineIndependenceTester::add(const Point& p) {
    if (count_ == 0) {
        base_ = p;
        count_ = 1;
        return true;
    }
    std::vector<mpz_class> row(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j)
        row[static_cast<std::size_t>(j)] =
            p[static_cast<std::size_t>(j)] - base_[static_cast<std::size_t>(j)];
    if (!reduce(row)) return false;
    int c = 0;
    while (row[static_cast<std::size_t>(c)] == 0) ++c;
    rows_.push_back(std::move(row));
    pivot_col_.push_back(c);
    ++count_;
    return true;
}

bool affinely_independent(const PointSet& s) {
    if (s.empty()) return true;
    return affine_dim(s) == static_cast<int>(s.size()) - 1;
}

} // namespace secant
