#include "tenslab/certify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tenslab/parallel.hpp"
#include "tenslab/rng.hpp"

namespace tenslab {

namespace {

RatMatrix slice_mode0(const Tensor& t, const std::vector<Rat>& alpha) {
    const int b = t.shape()[1], c = t.shape()[2];
    RatMatrix m(b, c);
    for (int i = 0; i < t.shape()[0]; ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < b; ++j)
            for (int k = 0; k < c; ++k) m(j, k) += alpha[i] * t.at({i, j, k});
    }
    return m;
}

void require_square_slices(const Tensor& t) {
    if (t.order() != 3) throw std::invalid_argument("order-3 tensor required");
    if (t.shape()[1] != t.shape()[2])
        throw std::invalid_argument("modes 2 and 3 must have equal dimension");
}

}  // namespace

CommutatorWitness strassen_commutator(const Tensor& t, const std::vector<Rat>& alpha,
                                      const std::vector<Rat>& alpha1,
                                      const std::vector<Rat>& alpha2) {
    require_square_slices(t);
    if (t.shape()[0] < 3)
        throw std::invalid_argument("commutator test needs mode-1 dimension >= 3");
    const std::size_t b = t.shape()[1];

    RatMatrix ta = slice_mode0(t, alpha);
    auto inv = ta.inverse();
    if (!inv) throw SingularSlice("T_alpha is singular");

    RatMatrix m1 = slice_mode0(t, alpha1).mul(*inv);
    RatMatrix m2 = slice_mode0(t, alpha2).mul(*inv);
    RatMatrix comm = m1.mul(m2).sub(m2.mul(m1));

    CommutatorWitness w;
    w.alpha = alpha;
    w.alpha1 = alpha1;
    w.alpha2 = alpha2;
    w.rank = comm.rank();
    w.commutator = std::move(comm);
    w.bound = b + (w.rank + 1) / 2;
    return w;
}

namespace {

Rat minor_det(const RatMatrix& m, int drop_row, int drop_col) {
    const std::size_t n = m.rows();
    RatMatrix sub(n - 1, n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) == drop_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(j) == drop_col) continue;
            sub(r, c) = m(i, j);
            ++c;
        }
        ++r;
    }
    return sub.determinant();
}

}  // namespace

RatMatrix strassen_P(const Tensor& t) {
    require_square_slices(t);
    if (t.shape()[0] != 3)
        throw std::invalid_argument("P matrix needs mode-1 dimension exactly 3");
    const int b = t.shape()[1];

    RatMatrix X(b, b), Y(b, b), Z(b, b);
    for (int j = 0; j < b; ++j)
        for (int k = 0; k < b; ++k) {
            X(j, k) = t.at({0, j, k});
            Y(j, k) = t.at({1, j, k});
            Z(j, k) = t.at({2, j, k});
        }

    RatMatrix P(b, b);
    for (int j = 0; j < b; ++j)
        for (int k = 0; k < b; ++k) {
            const Rat d = minor_det(X, j, k);
            if (d == 0) continue;
            const Rat sd = ((j + k) % 2 == 0) ? d : -d;
            for (int s = 0; s < b; ++s)
                for (int u = 0; u < b; ++u)
                    P(s, u) += sd * (Y(j, u) * Z(s, k) - Y(s, k) * Z(j, u));
        }
    return P;
}

Rat degree9_invariant(const Tensor& t) {
    if (t.shape() != std::vector<int>{3, 3, 3})
        throw std::invalid_argument("degree-9 invariant needs a 3x3x3 tensor");

    // Unimodular retries mixing the other slices into X.
    static const std::vector<std::vector<Rat>> changes = {
        {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}};

    for (const auto& g : changes) {
        Tensor s({3, 3, 3});
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                s.at({0, j, k}) = g[0] * t.at({0, j, k}) + g[1] * t.at({1, j, k}) +
                                  g[2] * t.at({2, j, k});
                s.at({1, j, k}) = t.at({1, j, k});
                s.at({2, j, k}) = t.at({2, j, k});
            }
        RatMatrix X(3, 3);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) X(j, k) = s.at({0, j, k});
        const Rat det_x = X.determinant();
        if (det_x == 0) continue;
        return strassen_P(s).determinant() / det_x;
    }
    throw std::runtime_error(
        "degree-9 invariant: det X vanished after 3 basis-change retries");
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

int subset_index(const std::vector<std::vector<int>>& table, const std::vector<int>& s) {
    auto it = std::lower_bound(table.begin(), table.end(), s);
    return static_cast<int>(it - table.begin());
}

// Shuffle sign of concatenating two disjoint sorted subsets.
int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b) {
    int inv = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Matrix of k x k minors: rows/cols indexed by sorted k-subsets.
RatMatrix wedge_power(const RatMatrix& m, int k,
                      const std::vector<std::vector<int>>& subs) {
    RatMatrix w(subs.size(), subs.size());
    for (std::size_t r = 0; r < subs.size(); ++r)
        for (std::size_t c = 0; c < subs.size(); ++c) {
            RatMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub(i, j) = m(subs[r][i], subs[c][j]);
            w(r, c) = sub.determinant();
        }
    return w;
}

}  // namespace

Tensor generalized_strassen(const Tensor& t, int s, int u,
                            const std::vector<Rat>& alpha,
                            const std::vector<Rat>& alpha1,
                            const std::vector<Rat>& alpha2) {
    require_square_slices(t);
    const int b = t.shape()[1];
    if (s < 1 || u < 1 || s + u > b)
        throw std::invalid_argument("need s,t >= 1 and s+t <= b");

    const auto subs_s = subsets_of_size(b, s);
    const auto subs_u = subsets_of_size(b, u);
    const auto subs_su = subsets_of_size(b, s + u);

    RatMatrix ws1 = wedge_power(slice_mode0(t, alpha1), s, subs_s);
    RatMatrix ws2 = wedge_power(slice_mode0(t, alpha2), s, subs_s);
    RatMatrix wu = wedge_power(slice_mode0(t, alpha), u, subs_u);

    const int n_su = static_cast<int>(subs_su.size());
    const int n_s = static_cast<int>(subs_s.size());
    Tensor out({n_su, n_su, n_s, n_s});

    // Splits P = I + J with |I| = s and Q = J' + K' with |J'| = u; the two
    // contraction orders swap which wedge power of the alpha1/alpha2 slices
    // supplies the standalone factors.
    for (int pi = 0; pi < n_su; ++pi) {
        const auto& P = subs_su[pi];
        std::vector<std::pair<std::vector<int>, std::vector<int>>> splits_p;
        for (const auto& picks : subsets_of_size(s + u, s)) {
            std::vector<int> I, J;
            std::vector<bool> used(s + u, false);
            for (int x : picks) used[x] = true;
            for (int x = 0; x < s + u; ++x) (used[x] ? I : J).push_back(P[x]);
            splits_p.emplace_back(std::move(I), std::move(J));
        }
        for (int qi = 0; qi < n_su; ++qi) {
            const auto& Q = subs_su[qi];
            std::vector<std::pair<std::vector<int>, std::vector<int>>> splits_q;
            for (const auto& picks : subsets_of_size(s + u, u)) {
                std::vector<int> Jp, Kp;
                std::vector<bool> used(s + u, false);
                for (int x : picks) used[x] = true;
                for (int x = 0; x < s + u; ++x) (used[x] ? Jp : Kp).push_back(Q[x]);
                splits_q.emplace_back(std::move(Jp), std::move(Kp));
            }
            for (int kb = 0; kb < n_s; ++kb)
                for (int ic = 0; ic < n_s; ++ic) {
                    Rat acc = 0;
                    for (const auto& [I, J] : splits_p) {
                        const int sign_p = shuffle_sign(I, J);
                        const int i_idx = subset_index(subs_s, I);
                        const int j_row = subset_index(subs_u, J);
                        for (const auto& [Jp, Kp] : splits_q) {
                            const int sign_q = shuffle_sign(Jp, Kp);
                            const int jp_idx = subset_index(subs_u, Jp);
                            const int kp_idx = subset_index(subs_s, Kp);
                            const Rat sg = sign_p * sign_q;
                            acc += sg * (ws1(i_idx, ic) * wu(j_row, jp_idx) *
                                             ws2(kb, kp_idx) -
                                         ws2(i_idx, ic) * wu(j_row, jp_idx) *
                                             ws1(kb, kp_idx));
                        }
                    }
                    out.at({pi, qi, kb, ic}) = acc;
                }
        }
    }
    return out;
}

std::string BoundReport::best_method() const {
    std::size_t m = 0;
    std::string name = "none";
    auto consider = [&](const std::optional<std::size_t>& v, const char* n) {
        if (v && *v > m) {
            m = *v;
            name = n;
        }
    };
    consider(flattening, "flattening");
    consider(multilinear, "multilinear");
    consider(commutator, "commutator");
    consider(p_matrix, "p-matrix");
    return name;
}

BoundReport border_rank_bounds(const Tensor& t, std::uint64_t seed, int threads) {
    BoundReport rep;
    const int n = static_cast<int>(t.order());

    // Flattening bound: max matrix rank over all proper splits.
    std::size_t flat = 0, multi = 0;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        if (!(mask & 1)) continue;  // complements have equal rank
        std::vector<int> modes;
        for (int m = 0; m < n; ++m)
            if (mask & (1 << m)) modes.push_back(m);
        flat = std::max(flat, exact_rank(flatten(t, modes)));
    }
    for (auto r : multilinear_ranks(t)) multi = std::max(multi, r);
    rep.flattening = flat;
    rep.multilinear = multi;

    // Commutator sampling on any orientation with a >= 3 and square slices.
    if (n == 3) {
        std::vector<std::array<int, 3>> orients;
        const auto& sh = t.shape();
        for (int m0 = 0; m0 < 3; ++m0) {
            int m1 = (m0 + 1) % 3, m2 = (m0 + 2) % 3;
            if (sh[m0] >= 3 && sh[m1] == sh[m2]) orients.push_back({m0, m1, m2});
        }
        if (!orients.empty()) {
            const auto [m0, m1, m2] = orients.front();
            Tensor view({sh[m0], sh[m1], sh[m2]});
            for (std::size_t lin = 0; lin < t.size(); ++lin) {
                auto idx = t.multi_index(lin);
                view.at({idx[m0], idx[m1], idx[m2]}) = t[lin];
            }

            constexpr int kTriples = 20;
            std::vector<std::size_t> bounds(kTriples, 0);
            parallel_chunks(kTriples, threads, [&](int, std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t trial = b; trial < e; ++trial) {
                    Rng rng = Rng::derive(seed, trial);
                    for (int attempt = 0; attempt < 40; ++attempt) {
                        std::vector<Rat> a0, a1, a2;
                        for (int i = 0; i < view.shape()[0]; ++i) {
                            a0.push_back(Rat(rng.uniform(-5, 5)));
                            a1.push_back(Rat(rng.uniform(-5, 5)));
                            a2.push_back(Rat(rng.uniform(-5, 5)));
                        }
                        try {
                            bounds[trial] =
                                strassen_commutator(view, a0, a1, a2).bound;
                            break;
                        } catch (const SingularSlice&) {
                            continue;
                        }
                    }
                }
            });
            std::size_t best = 0;
            for (auto b : bounds) best = std::max(best, b);
            if (best > 0) rep.commutator = best;
        } else {
            rep.notes.push_back("commutator test inapplicable for this shape");
        }

        // P-matrix bound when some orientation is 3 x b x b.
        for (int m0 = 0; m0 < 3 && !rep.p_matrix; ++m0) {
            int m1 = (m0 + 1) % 3, m2 = (m0 + 2) % 3;
            if (sh[m0] != 3 || sh[m1] != sh[m2]) continue;
            Tensor view({sh[m0], sh[m1], sh[m2]});
            for (std::size_t lin = 0; lin < t.size(); ++lin) {
                auto idx = t.multi_index(lin);
                view.at({idx[m0], idx[m1], idx[m2]}) = t[lin];
            }
            const std::size_t rk = strassen_P(view).rank();
            rep.p_matrix = static_cast<std::size_t>(sh[m1]) + (rk + 1) / 2;
        }
    }

    rep.best = 0;
    for (const auto& v : {rep.flattening, rep.multilinear, rep.commutator, rep.p_matrix})
        if (v) rep.best = std::max(rep.best, *v);
    return rep;
}

void attach_matmul_literature(BoundReport& report, int m) {
    report.literature.push_back(
        {"published rank lower bound 5/2 m^2 - 3m", Rat(5 * m * m) / 2 - 3 * m, true});
    report.literature.push_back({"published border-rank lower bound 3m^2/2 + m/2 - 1",
                                 Rat(3 * m * m) / 2 + Rat(m) / 2 - 1, true});
    if (m == 2)
        report.literature.push_back({"border rank of 2x2 multiplication", Rat(7), false});
    if (m == 3) {
        report.literature.push_back({"best published upper bound (21 products)", Rat(21), false});
        report.literature.push_back({"best published rank lower bound (19)", Rat(19), true});
    }
}

std::string to_string(PencilClass c) {
    switch (c) {
        case PencilClass::S: return "S";
        case PencilClass::B: return "B";
        case PencilClass::W: return "W";
        case PencilClass::GHZ: return "GHZ";
    }
    return "?";
}

PencilClass classify_222(const Tensor& t) {
    if (t.shape() != std::vector<int>{2, 2, 2})
        throw std::invalid_argument("classification needs a 2x2x2 tensor");
    if (t.is_zero()) throw std::invalid_argument("zero tensor has no class");

    const auto ranks = multilinear_ranks(t);
    bool all_one = true, some_one = false;
    for (auto r : ranks) {
        all_one = all_one && r == 1;
        some_one = some_one || r == 1;
    }
    if (all_one) return PencilClass::S;
    if (some_one) return PencilClass::B;

    // det(x T0 + y T1) = det(T0) x^2 + m xy + det(T1) y^2; a double root is
    // the tangent-variety stratum.
    RatMatrix t0(2, 2), t1(2, 2);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            t0(j, k) = t.at({0, j, k});
            t1(j, k) = t.at({1, j, k});
        }
    const Rat d0 = t0.determinant();
    const Rat d1 = t1.determinant();
    const Rat mixed = t.at({0, 0, 0}) * t.at({1, 1, 1}) - t.at({0, 0, 1}) * t.at({1, 1, 0}) -
                      t.at({0, 1, 0}) * t.at({1, 0, 1}) + t.at({0, 1, 1}) * t.at({1, 0, 0});
    const Rat disc = mixed * mixed - 4 * d0 * d1;
    return disc == 0 ? PencilClass::W : PencilClass::GHZ;
}

std::string to_string(PhyloTopology t) {
    switch (t) {
        case PhyloTopology::T12_34: return "12|34";
        case PhyloTopology::T13_24: return "13|24";
        case PhyloTopology::T14_23: return "14|23";
    }
    return "?";
}

std::optional<PhyloTopology> phylo_topology_from_string(const std::string& s) {
    if (s == "12|34") return PhyloTopology::T12_34;
    if (s == "13|24") return PhyloTopology::T13_24;
    if (s == "14|23") return PhyloTopology::T14_23;
    return std::nullopt;
}

PhyloReport phylo_necessary(const Tensor& t, PhyloTopology topology) {
    if (t.shape() != std::vector<int>{4, 4, 4, 4})
        throw std::invalid_argument("phylogenetic test needs a 4x4x4x4 tensor");
    std::vector<int> group;
    switch (topology) {
        case PhyloTopology::T12_34: group = {0, 1}; break;
        case PhyloTopology::T13_24: group = {0, 2}; break;
        case PhyloTopology::T14_23: group = {0, 3}; break;
    }
    std::vector<int> other;
    for (int m = 0; m < 4; ++m)
        if (m != group[0] && m != group[1]) other.push_back(m);

    PhyloReport rep;
    rep.rank_primary = exact_rank(flatten(t, group));
    rep.rank_secondary = exact_rank(flatten(t, other));
    rep.compatible = rep.rank_primary <= 4 && rep.rank_secondary <= 4;
    return rep;
}

}  // namespace tenslab
