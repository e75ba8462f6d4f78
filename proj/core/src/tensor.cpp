#include "tenslab/tensor.hpp"

#include <algorithm>

namespace tenslab {

namespace {

template <typename S>
BasicTensor<S> outer_impl(const std::vector<std::vector<S>>& factors) {
    std::vector<int> shape;
    shape.reserve(factors.size());
    for (const auto& f : factors) shape.push_back(static_cast<int>(f.size()));
    BasicTensor<S> t(shape);
    std::vector<int> idx(shape.size(), 0);
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        auto mi = t.multi_index(lin);
        S prod = factors[0][mi[0]];
        for (std::size_t m = 1; m < factors.size() && !(prod == S(0)); ++m)
            prod = prod * factors[m][mi[m]];
        t[lin] = prod;
    }
    return t;
}

}  // namespace

Tensor outer(const std::vector<std::vector<Rat>>& factors) {
    return outer_impl(factors);
}

EpsTensor outer_eps(const std::vector<std::vector<EpsScalar>>& factors) {
    return outer_impl(factors);
}

EpsTensor lift(const Tensor& t) {
    EpsTensor e(t.shape());
    for (std::size_t i = 0; i < t.size(); ++i) e[i] = EpsScalar(t[i]);
    return e;
}

Tensor eps_limit(const EpsTensor& t) {
    Tensor r(t.shape());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].coeffs().empty() && t[i].coeffs().begin()->first < 0) {
            auto idx = t.multi_index(i);
            std::string where;
            for (std::size_t m = 0; m < idx.size(); ++m)
                where += (m ? "," : "") + std::to_string(idx[m]);
            throw DivergentLimit("divergent eps -> 0 limit at entry (" + where +
                                 "): " + t[i].str());
        }
        r[i] = t[i].coeff(0);
    }
    return r;
}

RatMatrix flatten(const Tensor& t, const std::vector<int>& row_modes) {
    const int n = static_cast<int>(t.order());
    std::vector<bool> in_rows(n, false);
    for (int m : row_modes) {
        if (m < 0 || m >= n) throw InvalidModeSet("mode out of range");
        if (in_rows[m]) throw InvalidModeSet("duplicate mode");
        in_rows[m] = true;
    }
    if (row_modes.empty() || row_modes.size() == t.order())
        throw InvalidModeSet("flattening needs a nonempty proper mode subset");

    std::vector<int> rows, cols;
    for (int m = 0; m < n; ++m) (in_rows[m] ? rows : cols).push_back(m);

    std::size_t nr = 1, nc = 1;
    for (int m : rows) nr *= static_cast<std::size_t>(t.shape()[m]);
    for (int m : cols) nc *= static_cast<std::size_t>(t.shape()[m]);

    RatMatrix mat(nr, nc);
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        auto idx = t.multi_index(lin);
        std::size_t r = 0, c = 0;
        for (int m : rows) r = r * static_cast<std::size_t>(t.shape()[m]) + idx[m];
        for (int m : cols) c = c * static_cast<std::size_t>(t.shape()[m]) + idx[m];
        mat(r, c) = t[lin];
    }
    return mat;
}

std::size_t exact_rank(const RatMatrix& m) { return m.rank(); }

Tensor contract(const Tensor& t, int mode, const std::vector<Rat>& covector) {
    const int n = static_cast<int>(t.order());
    if (mode < 0 || mode >= n) throw std::invalid_argument("mode out of range");
    if (covector.size() != static_cast<std::size_t>(t.shape()[mode]))
        throw std::invalid_argument("covector length mismatch");

    std::vector<int> out_shape;
    for (int m = 0; m < n; ++m)
        if (m != mode) out_shape.push_back(t.shape()[m]);
    if (out_shape.empty()) out_shape.push_back(1);  // order-1 input -> scalar in a 1-dim tensor

    Tensor r(out_shape);
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        if (t[lin] == 0) continue;
        auto idx = t.multi_index(lin);
        const Rat w = covector[idx[mode]];
        if (w == 0) continue;
        std::vector<int> out_idx;
        for (int m = 0; m < n; ++m)
            if (m != mode) out_idx.push_back(idx[m]);
        if (out_idx.empty()) out_idx.push_back(0);
        r.at(out_idx) += w * t[lin];
    }
    return r;
}

std::vector<std::size_t> multilinear_ranks(const Tensor& t) {
    std::vector<std::size_t> ranks;
    for (int m = 0; m < static_cast<int>(t.order()); ++m)
        ranks.push_back(exact_rank(flatten(t, {m})));
    return ranks;
}

}  // namespace tenslab
