#include "tenslab/matrix.hpp"

#include <stdexcept>

namespace tenslab {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dim mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

RatMatrix RatMatrix::sub(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dim mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

std::size_t RatMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    // Clear denominators row by row; scaling rows does not change rank.
    std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < cols_; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    (*this)(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols_; ++j) {
            Rat v = (*this)(i, j) * lcm;
            m[i][j] = v.get_num();
        }
    }

    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && m[piv][col] == 0) ++piv;
        if (piv == rows_) continue;
        std::swap(m[rank], m[piv]);
        const Int pivot = m[rank][col];
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            for (std::size_t j = col + 1; j < cols_; ++j) {
                Int t = m[i][j] * pivot - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Rat inv = Rat(1) / m[r][col];
        for (std::size_t j = col; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> RatMatrix::kernel() const {
    std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j);
    auto pivots = rref(m);

    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
    const std::size_t n = rows_;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (*this)(i, j);
        m[i][n + i] = 1;
    }
    auto pivots = rref(m);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = m[i][n + j];
    return inv;
}

Rat RatMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square");
    const std::size_t n = rows_;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (*this)(i, j);
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const Rat f = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

std::size_t span_rank(const std::vector<std::vector<Rat>>& vecs) {
    if (vecs.empty()) return 0;
    return RatMatrix::from_rows(vecs).rank();
}

bool in_span(const std::vector<std::vector<Rat>>& vecs, const std::vector<Rat>& v) {
    const std::size_t base = span_rank(vecs);
    auto ext = vecs;
    ext.push_back(v);
    return span_rank(ext) == base;
}

}  // namespace tenslab
