#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tenslab/rational.hpp"

namespace tenslab {

// Dense matrix over the rationals with exact linear algebra.
// Rank goes through fraction-free (Bareiss) elimination on a
// denominator-cleared integer copy; pivots are the first nonzero entry in
// column order, so results are deterministic.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    RatMatrix transposed() const;
    RatMatrix mul(const RatMatrix& o) const;
    RatMatrix sub(const RatMatrix& o) const;

    std::size_t rank() const;

    // Basis of { x : M x = 0 }.
    std::vector<std::vector<Rat>> kernel() const;

    // Inverse for square nonsingular input; nullopt when singular.
    std::optional<RatMatrix> inverse() const;

    Rat determinant() const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Rank of the span of a set of coordinate vectors.
std::size_t span_rank(const std::vector<std::vector<Rat>>& vecs);

// True when v lies in the span of the given vectors.
bool in_span(const std::vector<std::vector<Rat>>& vecs, const std::vector<Rat>& v);

}  // namespace tenslab
