#include "tenslab/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tenslab {

bool Decomposition::eps_free() const {
    if (!prefactor.is_scalar()) return false;
    for (const auto& t : terms)
        for (const auto& f : t.factors)
            for (const auto& x : f)
                if (!x.is_scalar()) return false;
    return true;
}

void Decomposition::validate() const {
    for (const auto& t : terms) {
        if (t.factors.size() != shape.size())
            throw std::invalid_argument("term mode count mismatch in '" + name + "'");
        for (std::size_t m = 0; m < shape.size(); ++m)
            if (t.factors[m].size() != static_cast<std::size_t>(shape[m]))
                throw std::invalid_argument("factor length mismatch in '" + name + "'");
        if (!t.factors_nonzero())
            throw std::invalid_argument("zero factor vector in '" + name + "'");
    }
}

EpsTensor assemble(const Decomposition& d) {
    d.validate();
    EpsTensor acc(d.shape);
    for (const auto& t : d.terms) acc += outer_eps(t.factors);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] *= d.prefactor;
    return acc;
}

Tensor matmul_tensor(int m, int n, int p) {
    if (m < 1 || n < 1 || p < 1)
        throw std::invalid_argument("matmul_tensor dims must be >= 1");
    Tensor t({m * n, n * p, m * p});
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < p; ++l)
                t.at({i * n + k, k * p + l, i * p + l}) = 1;
    return t;
}

Tensor matmul_tensor_partial(int m, int n, int p,
                             const std::vector<std::pair<int, int>>& zero_a) {
    std::vector<int> a_index(m * n, -1);
    int dim_a = 0;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) {
            bool zero = false;
            for (auto [zi, zk] : zero_a) zero = zero || (zi == i && zk == k);
            if (!zero) a_index[i * n + k] = dim_a++;
        }
    Tensor t({dim_a, n * p, m * p});
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) {
            if (a_index[i * n + k] < 0) continue;
            for (int l = 0; l < p; ++l)
                t.at({a_index[i * n + k], k * p + l, i * p + l}) = 1;
        }
    return t;
}

Tensor w_state() {
    Tensor t({2, 2, 2});
    t.at({0, 0, 0}) = 1;
    t.at({0, 0, 1}) = 1;
    t.at({0, 1, 0}) = 1;
    t.at({1, 0, 0}) = 1;
    return t;
}

Tensor ghz_state() {
    Tensor t({2, 2, 2});
    t.at({0, 0, 0}) = 1;
    t.at({1, 1, 1}) = 1;
    return t;
}

bool verify_exact(const Decomposition& d, const Tensor& target) {
    if (!d.eps_free())
        throw std::invalid_argument("verify_exact on an eps-dependent computation");
    if (d.shape != target.shape()) return false;
    return assemble(d) == lift(target);
}

namespace {

bool term_rank_one_at(const RankOneTerm& t, const Rat& eps0) {
    for (const auto& f : t.factors) {
        bool nonzero = false;
        for (const auto& x : f) nonzero = nonzero || (x.eval(eps0) != 0);
        if (!nonzero) return false;
    }
    return true;
}

}  // namespace

BorderVerification verify_border(const Decomposition& d, const Tensor& target) {
    BorderVerification out;
    if (d.shape != target.shape()) {
        out.reason = "shape mismatch";
        return out;
    }
    EpsTensor a = assemble(d);
    Tensor limit;
    try {
        limit = eps_limit(a);
    } catch (const DivergentLimit& e) {
        out.reason = e.what();
        return out;
    }
    if (limit != target) {
        out.reason = "eps -> 0 limit differs from target";
        return out;
    }

    bool ok_at_eps0 = true;
    for (const Rat& eps0 : {Rat(1, 7), Rat(1, 11)}) {
        ok_at_eps0 = true;
        for (const auto& t : d.terms)
            ok_at_eps0 = ok_at_eps0 && term_rank_one_at(t, eps0);
        if (ok_at_eps0) break;
    }
    if (!ok_at_eps0) {
        out.reason = "a term degenerates at both generic substitutions";
        return out;
    }

    EpsTensor remainder = a - lift(target);
    int order = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < remainder.size(); ++i)
        if (!remainder[i].is_zero()) order = std::min(order, remainder[i].order());
    out.ok = true;
    if (order != std::numeric_limits<int>::max()) out.remainder_order = order;
    return out;
}

bool mult_complexity_verify(const VSplitDecomposition& vd, const Tensor& target) {
    const Decomposition& d = vd.decomposition;
    d.validate();
    if (!d.eps_free())
        throw std::invalid_argument("mult_complexity_verify needs an exact computation");
    if (d.shape.size() != 3 || d.shape[0] != d.shape[1])
        throw std::invalid_argument("split computation must have equal first two modes");
    const int split = vd.split;
    const int v = d.shape[0];
    if (split <= 0 || split >= v)
        throw std::invalid_argument("split point must be strictly inside the mode");
    const int dim_a = split, dim_b = v - split, dim_c = d.shape[2];
    if (target.shape() != std::vector<int>{dim_a, dim_b, dim_c})
        throw std::invalid_argument("target incompatible with the split");

    const Rat pre = d.prefactor.coeff(0);

    // Components of the symmetrized computation: the quadratic form
    // q(a+b) = sum f_i(a+b) g_i(a+b) c_i splits into an S^2A part, an S^2B
    // part, and a mixed part f_A (x) g_B + g_A (x) f_B that must equal the
    // target bilinear map.
    Tensor mixed({dim_a, dim_b, dim_c});
    Tensor sym_a({dim_a, dim_a, dim_c});
    Tensor sym_b({dim_b, dim_b, dim_c});

    for (const auto& t : d.terms) {
        std::vector<Rat> f(v), g(v), c(dim_c);
        for (int i = 0; i < v; ++i) f[i] = t.factors[0][i].coeff(0);
        for (int i = 0; i < v; ++i) g[i] = t.factors[1][i].coeff(0);
        for (int i = 0; i < dim_c; ++i) c[i] = pre * t.factors[2][i].coeff(0);

        for (int z = 0; z < dim_c; ++z) {
            if (c[z] == 0) continue;
            for (int x = 0; x < dim_a; ++x)
                for (int y = 0; y < dim_b; ++y)
                    mixed.at({x, y, z}) +=
                        (f[x] * g[split + y] + g[x] * f[split + y]) * c[z];
            for (int x = 0; x < dim_a; ++x)
                for (int y = 0; y < dim_a; ++y)
                    sym_a.at({x, y, z}) += (f[x] * g[y] + g[x] * f[y]) * c[z];
            for (int x = 0; x < dim_b; ++x)
                for (int y = 0; y < dim_b; ++y)
                    sym_b.at({x, y, z}) +=
                        (f[split + x] * g[split + y] + g[split + x] * f[split + y]) * c[z];
        }
    }
    return sym_a.is_zero() && sym_b.is_zero() && mixed == target;
}

Decomposition standard_base(int q) {
    Decomposition d;
    d.name = "standard-" + std::to_string(q) + "x" + std::to_string(q);
    d.shape = {q * q, q * q, q * q};
    for (int i = 0; i < q; ++i)
        for (int k = 0; k < q; ++k)
            for (int l = 0; l < q; ++l) {
                RankOneTerm t;
                t.factors.assign(3, {});
                t.factors[0].assign(q * q, EpsScalar(Rat(0)));
                t.factors[1].assign(q * q, EpsScalar(Rat(0)));
                t.factors[2].assign(q * q, EpsScalar(Rat(0)));
                t.factors[0][i * q + k] = EpsScalar(Rat(1));
                t.factors[1][k * q + l] = EpsScalar(Rat(1));
                t.factors[2][i * q + l] = EpsScalar(Rat(1));
                d.terms.push_back(std::move(t));
            }
    return d;
}

}  // namespace tenslab
