#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tenslab/decomposition.hpp"
#include "tenslab/rational.hpp"

namespace tenslab {

struct MultStats {
    std::uint64_t multiplications = 0;  // bilinear (leaf) products
    std::uint64_t additions = 0;        // entrywise adds/subs, measured
    int recursion_depth = 0;
    int padded_size = 0;

    MultStats& operator+=(const MultStats& o) {
        multiplications += o.multiplications;
        additions += o.additions;
        recursion_depth = std::max(recursion_depth, o.recursion_depth);
        padded_size = std::max(padded_size, o.padded_size);
        return *this;
    }
};

// Coefficient mode is fixed by the scalar type: Rat never rounds, double is
// the machine-number mode.
template <typename S>
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<S> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, S(0)) {}

    S& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const S& operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    bool operator==(const DenseMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

namespace detail {

// Square base with rational coefficients, extracted once from a verified
// decomposition.
struct RecursiveBase {
    int q = 0;
    std::vector<std::vector<Rat>> alpha, beta, gamma;  // per term, length q*q
};

RecursiveBase make_base(const Decomposition& d);

template <typename S>
S to_coeff(const Rat& r) {
    if constexpr (std::is_same_v<S, Rat>)
        return r;
    else
        return r.get_d();
}

template <typename S>
struct View {
    S* p;
    int n;       // view is n x n
    int stride;  // row stride of the backing buffer

    S& at(int i, int j) const { return p[std::size_t(i) * stride + j]; }
};

template <typename S>
void classical_into(const View<S>& A, const View<S>& B, const View<S>& C,
                    MultStats& st) {
    const int n = A.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S acc = A.at(i, 0) * B.at(0, j);
            for (int k = 1; k < n; ++k) acc += A.at(i, k) * B.at(k, j);
            C.at(i, j) = acc;
        }
    st.multiplications += std::uint64_t(n) * n * n;
    st.additions += std::uint64_t(n) * n * (n - 1);
}

// out = sum coeff[b] * blocks[b] over the q x q block grid of src.
template <typename S>
void combine_blocks(const View<S>& src, int q, int s,
                    const std::vector<Rat>& coeff, std::vector<S>& out,
                    MultStats& st) {
    out.assign(std::size_t(s) * s, S(0));
    bool first = true;
    for (int bi = 0; bi < q; ++bi)
        for (int bj = 0; bj < q; ++bj) {
            const Rat& c = coeff[bi * q + bj];
            if (c == 0) continue;
            const S cc = to_coeff<S>(c);
            const bool unit = (c == 1), neg_unit = (c == -1);
            for (int i = 0; i < s; ++i) {
                const S* row = &src.at(bi * s + i, bj * s);
                S* dst = &out[std::size_t(i) * s];
                for (int j = 0; j < s; ++j) {
                    S v;
                    if (unit)
                        v = row[j];
                    else if (neg_unit)
                        v = S(0) - row[j];
                    else
                        v = cc * row[j];
                    if (first)
                        dst[j] = std::move(v);
                    else {
                        dst[j] += v;
                        ++st.additions;
                    }
                }
            }
            first = false;
        }
}

template <typename S>
void recursive_into(const View<S>& A, const View<S>& B, const View<S>& C,
                    const RecursiveBase& base, int cutoff, int threads,
                    int depth, MultStats& st);

template <typename S>
void run_term(const View<S>& A, const View<S>& B, const RecursiveBase& base,
              std::size_t t, int s, int cutoff, int depth,
              std::vector<S>& product, MultStats& st) {
    std::vector<S> la, lb;
    combine_blocks(A, base.q, s, base.alpha[t], la, st);
    combine_blocks(B, base.q, s, base.beta[t], lb, st);
    product.assign(std::size_t(s) * s, S(0));
    View<S> va{la.data(), s, s}, vb{lb.data(), s, s}, vp{product.data(), s, s};
    recursive_into(va, vb, vp, base, cutoff, 1, depth + 1, st);
}

template <typename S>
void recursive_into(const View<S>& A, const View<S>& B, const View<S>& C,
                    const RecursiveBase& base, int cutoff, int threads,
                    int depth, MultStats& st) {
    st.recursion_depth = std::max(st.recursion_depth, depth);
    if (A.n <= cutoff || A.n % base.q != 0) {
        classical_into(A, B, C, st);
        return;
    }
    const int q = base.q, s = A.n / q;
    const std::size_t r = base.alpha.size();

    std::vector<std::vector<S>> products(r);
    std::vector<MultStats> term_stats(r);

    if (threads > 1) {
        // Static partition over terms keeps the work deterministic.
        std::vector<std::thread> pool;
        const unsigned nt = std::min<std::size_t>(threads, r);
        for (unsigned w = 0; w < nt; ++w) {
            pool.emplace_back([&, w, nt]() {
                for (std::size_t t = w; t < r; t += nt)
                    run_term(A, B, base, t, s, cutoff, depth, products[t],
                             term_stats[t]);
            });
        }
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t t = 0; t < r; ++t)
            run_term(A, B, base, t, s, cutoff, depth, products[t], term_stats[t]);
    }

    // Accumulation happens in term order regardless of thread count, so
    // results are bit-identical to the sequential run.
    for (std::size_t t = 0; t < r; ++t) st += term_stats[t];
    for (std::size_t t = 0; t < r; ++t) {
        for (int bi = 0; bi < q; ++bi)
            for (int bj = 0; bj < q; ++bj) {
                const Rat& c = base.gamma[t][bi * q + bj];
                if (c == 0) continue;
                const S cc = to_coeff<S>(c);
                const bool unit = (c == 1), neg_unit = (c == -1);
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) {
                        const S& v = products[t][std::size_t(i) * s + j];
                        if (unit)
                            C.at(bi * s + i, bj * s + j) += v;
                        else if (neg_unit)
                            C.at(bi * s + i, bj * s + j) -= v;
                        else
                            C.at(bi * s + i, bj * s + j) += cc * v;
                        ++st.additions;
                    }
            }
    }
}

}  // namespace detail

template <typename S>
std::pair<DenseMatrix<S>, MultStats> classical_mul(const DenseMatrix<S>& A,
                                                   const DenseMatrix<S>& B) {
    if (A.cols != B.rows) throw std::invalid_argument("inner dimensions disagree");
    DenseMatrix<S> C(A.rows, B.cols);
    MultStats st;
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) {
            S acc = S(0);
            for (int k = 0; k < A.cols; ++k) {
                acc += A(i, k) * B(k, j);
                ++st.multiplications;
                if (k > 0) ++st.additions;
            }
            C(i, j) = acc;
        }
    return {std::move(C), st};
}

inline int pad_to_power(int n, int q) {
    int m = 1;
    while (m < n) m *= q;
    return m;
}

// Recursive multiplication with a verified square base. Inputs are padded
// with zeros to the next power of q; below `cutoff` the classical kernel
// takes over.
template <typename S>
std::pair<DenseMatrix<S>, MultStats> recursive_mul(const DenseMatrix<S>& A,
                                                   const DenseMatrix<S>& B,
                                                   const Decomposition& base,
                                                   int cutoff, int threads = 1) {
    if (A.cols != B.rows) throw std::invalid_argument("inner dimensions disagree");
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    auto rb = detail::make_base(base);

    const int n = std::max({A.rows, A.cols, B.cols});
    const int N = pad_to_power(n, rb.q);

    DenseMatrix<S> PA(N, N), PB(N, N), PC(N, N);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) PA(i, j) = A(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) PB(i, j) = B(i, j);

    MultStats st;
    st.padded_size = N;
    detail::View<S> va{PA.a.data(), N, N}, vb{PB.a.data(), N, N},
        vc{PC.a.data(), N, N};
    detail::recursive_into(va, vb, vc, rb, cutoff, threads, 0, st);

    DenseMatrix<S> C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C(i, j) = PC(i, j);
    return {std::move(C), st};
}

// Closed-form predicted multiplication count for a base with unit
// coefficients: count(m) = m^3 below the cutoff, r * count(m/q) above.
std::uint64_t mult_count_model(int n, int q, std::uint64_t r_base_terms, int cutoff);

// Least-squares slope of log(count) against log(n).
double exponent_estimate(const std::vector<int>& sizes,
                         const std::vector<std::uint64_t>& counts);

}  // namespace tenslab
