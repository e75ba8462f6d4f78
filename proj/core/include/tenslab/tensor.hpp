#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tenslab/eps.hpp"
#include "tenslab/matrix.hpp"
#include "tenslab/rational.hpp"

namespace tenslab {

struct InvalidModeSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense order-n tensor. Multi-indices are 0-based and linearized row-major
// in the given mode order; that convention is load-bearing for the
// flattening row/column layout and is never changed.
template <typename S>
class BasicTensor {
public:
    BasicTensor() = default;
    explicit BasicTensor(std::vector<int> shape)
        : shape_(std::move(shape)), data_(count(shape_), S(0)) {
        for (int d : shape_)
            if (d <= 0) throw std::invalid_argument("tensor dims must be positive");
    }

    const std::vector<int>& shape() const { return shape_; }
    std::size_t order() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }

    std::size_t linear_index(const std::vector<int>& idx) const {
        if (idx.size() != shape_.size())
            throw std::invalid_argument("index arity mismatch");
        std::size_t lin = 0;
        for (std::size_t m = 0; m < shape_.size(); ++m) {
            if (idx[m] < 0 || idx[m] >= shape_[m])
                throw std::out_of_range("tensor index out of range");
            lin = lin * static_cast<std::size_t>(shape_[m]) +
                  static_cast<std::size_t>(idx[m]);
        }
        return lin;
    }

    std::vector<int> multi_index(std::size_t lin) const {
        std::vector<int> idx(shape_.size());
        for (std::size_t m = shape_.size(); m-- > 0;) {
            idx[m] = static_cast<int>(lin % static_cast<std::size_t>(shape_[m]));
            lin /= static_cast<std::size_t>(shape_[m]);
        }
        return idx;
    }

    S& at(const std::vector<int>& idx) { return data_[linear_index(idx)]; }
    const S& at(const std::vector<int>& idx) const {
        return data_[linear_index(idx)];
    }
    S& operator[](std::size_t lin) { return data_[lin]; }
    const S& operator[](std::size_t lin) const { return data_[lin]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == S(0))) return false;
        return true;
    }

    friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
        return a.shape_ == b.shape_ && a.data_ == b.data_;
    }
    friend bool operator!=(const BasicTensor& a, const BasicTensor& b) {
        return !(a == b);
    }

    BasicTensor& operator+=(const BasicTensor& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    BasicTensor& operator-=(const BasicTensor& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
    friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }

    BasicTensor scaled(const S& c) const {
        BasicTensor r = *this;
        for (auto& x : r.data_) x = x * c;
        return r;
    }

    static std::size_t count(const std::vector<int>& shape) {
        std::size_t n = 1;
        for (int d : shape) n *= static_cast<std::size_t>(d);
        return n;
    }

private:
    void check_same_shape(const BasicTensor& o) const {
        if (shape_ != o.shape_) throw std::invalid_argument("shape mismatch");
    }

    std::vector<int> shape_;
    std::vector<S> data_;
};

using Tensor = BasicTensor<Rat>;
using EpsTensor = BasicTensor<EpsScalar>;

// Rank-one tensor from one coefficient vector per mode.
Tensor outer(const std::vector<std::vector<Rat>>& factors);
EpsTensor outer_eps(const std::vector<std::vector<EpsScalar>>& factors);

EpsTensor lift(const Tensor& t);

// Degree-0 coefficient tensor. Throws DivergentLimit naming the first
// offending entry when any entry carries a negative power.
Tensor eps_limit(const EpsTensor& t);

// Groups modes `row_modes` (0-based) into the row index and the complement
// into the column index, both in increasing mode order.
RatMatrix flatten(const Tensor& t, const std::vector<int>& row_modes);

std::size_t exact_rank(const RatMatrix& m);

// Pairs `covector` against the given mode, producing an order n-1 tensor.
Tensor contract(const Tensor& t, int mode, const std::vector<Rat>& covector);

// Per-mode flattening ranks; entrywise <= s is membership in the
// s-subspace variety.
std::vector<std::size_t> multilinear_ranks(const Tensor& t);

}  // namespace tenslab
