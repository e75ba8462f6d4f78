#pragma once

#include <map>
#include <vector>

#include "tenslab/rational.hpp"

namespace tenslab {

// Monomials of a fixed degree in N variables, enumerated in graded
// lexicographic order (within the degree: exponent vectors in descending
// lex order, x1^k first). The order is fixed artifact-wide.
class MonomialBasis {
public:
    MonomialBasis(int num_vars, int degree);

    int num_vars() const { return n_; }
    int degree() const { return d_; }
    std::size_t size() const { return exponents_.size(); }
    const std::vector<int>& exponent(std::size_t i) const { return exponents_[i]; }
    std::size_t index(const std::vector<int>& e) const;

private:
    int n_, d_;
    std::vector<std::vector<int>> exponents_;
    std::map<std::vector<int>, std::size_t> lookup_;
};

// Homogeneous polynomial as a coefficient vector over a MonomialBasis.
// Multiplication by a single power of a linear form is all the callers
// need, plus full power expansion for Veronese points.
std::vector<Rat> poly_linear_power(const std::vector<Rat>& linear, int d,
                                   const MonomialBasis& basis);

// Product of a degree-k coefficient vector with one variable x_i.
std::vector<Rat> poly_mul_var(const std::vector<Rat>& coeffs,
                              const MonomialBasis& from, int var,
                              const MonomialBasis& to);

// d/dx_i as a map between monomial bases of adjacent degrees.
std::vector<Rat> poly_diff(const std::vector<Rat>& coeffs, const MonomialBasis& from,
                           int var, const MonomialBasis& to);

}  // namespace tenslab
