#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tenslab/certify.hpp"
#include "tenslab/decomposition.hpp"
#include "tenslab/rng.hpp"

using namespace tenslab;

namespace {

std::vector<Rat> random_covector(int n, Rng& rng, int lo = -5, int hi = 5) {
    std::vector<Rat> v(n);
    for (auto& x : v) x = Rat(rng.uniform(lo, hi));
    return v;
}

Tensor random_rank_sum(int a, int b, int c, int r, Rng& rng) {
    Tensor t({a, b, c});
    for (int i = 0; i < r; ++i) {
        std::vector<std::vector<Rat>> fs = {random_covector(a, rng, -9, 9),
                                            random_covector(b, rng, -9, 9),
                                            random_covector(c, rng, -9, 9)};
        t += outer(fs);
    }
    return t;
}

Tensor random_dense(const std::vector<int>& shape, Rng& rng) {
    Tensor t(shape);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = Rat(rng.uniform(-9, 9));
    return t;
}

RatMatrix random_invertible(int n, Rng& rng) {
    for (;;) {
        RatMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = Rat(rng.uniform(-3, 3));
        if (g.determinant() != 0) return g;
    }
}

Tensor change_basis_mode(const Tensor& t, int mode, const RatMatrix& g) {
    Tensor out(t.shape());
    for (std::size_t lin = 0; lin < t.size(); ++lin) {
        if (t[lin] == 0) continue;
        auto idx = t.multi_index(lin);
        for (int to = 0; to < t.shape()[mode]; ++to) {
            if (g(to, idx[mode]) == 0) continue;
            auto dst = idx;
            dst[mode] = to;
            out.at(dst) += g(to, idx[mode]) * t[lin];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("commutator bound on matrix multiplication") {
    SUBCASE("2x2: rank 4, bound 6") {
        const Tensor m = matmul_tensor(2, 2, 2);
        Rng rng(1);
        for (int trial = 0; trial < 5; ++trial) {
            try {
                auto w = strassen_commutator(m, random_covector(4, rng),
                                             random_covector(4, rng),
                                             random_covector(4, rng));
                CHECK(w.rank == 4);
                CHECK(w.bound == 6);
            } catch (const SingularSlice&) {
                continue;  // resampled by callers in production paths
            }
        }
    }
    SUBCASE("3x3: rank 9, bound 14") {
        const Tensor m = matmul_tensor(3, 3, 3);
        Rng rng(2);
        for (int trial = 0; trial < 3; ++trial) {
            try {
                auto w = strassen_commutator(m, random_covector(9, rng),
                                             random_covector(9, rng),
                                             random_covector(9, rng));
                CHECK(w.rank == 9);
                CHECK(w.bound == 14);
            } catch (const SingularSlice&) {
                continue;
            }
        }
    }
    SUBCASE("diagonal slices commute") {
        Tensor t({3, 3, 3});
        for (int i = 0; i < 3; ++i) t.at({i, i, i}) = 1;
        auto w = strassen_commutator(t, {Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(3)},
                                     {Rat(2), Rat(-1), Rat(5)});
        CHECK(w.rank == 0);
        CHECK(w.bound == 3);
    }
    SUBCASE("singular slice throws") {
        const Tensor m = matmul_tensor(2, 2, 2);
        Rng rng(3);
        CHECK_THROWS_AS(strassen_commutator(m, std::vector<Rat>(4, Rat(0)),
                                            random_covector(4, rng),
                                            random_covector(4, rng)),
                        SingularSlice);
    }
    SUBCASE("bound never beats a verified computation of the same tensor") {
        const Tensor m = matmul_tensor(2, 2, 2);
        Rng rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            try {
                auto w = strassen_commutator(m, random_covector(4, rng),
                                             random_covector(4, rng),
                                             random_covector(4, rng));
                CHECK(w.bound <= catalog("strassen-2x2").length());
                CHECK(w.bound <= catalog("standard-2x2").length());
            } catch (const SingularSlice&) {
            }
        }
    }
}

TEST_CASE("explicit P matrix") {
    Rng rng(7);
    SUBCASE("X = identity reduces to a commutator") {
        Tensor t({3, 3, 3});
        for (int j = 0; j < 3; ++j) t.at({0, j, j}) = 1;
        RatMatrix Y(3, 3), Z(3, 3);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Y(j, k) = Rat(rng.uniform(-4, 4));
                Z(j, k) = Rat(rng.uniform(-4, 4));
                t.at({1, j, k}) = Y(j, k);
                t.at({2, j, k}) = Z(j, k);
            }
        const RatMatrix P = strassen_P(t);
        const RatMatrix comm = Z.mul(Y).sub(Y.mul(Z));
        CHECK(P == comm);
    }
    SUBCASE("vanishes identically on rank <= b sums") {
        for (int trial = 0; trial < 20; ++trial) {
            Rng local = Rng::derive(11, trial);
            const Tensor t = random_rank_sum(3, 3, 3, 3, local);
            CHECK(strassen_P(t).rank() == 0);
        }
    }
    SUBCASE("det P vanishes on rank-4 sums of 3x3x3") {
        for (int trial = 0; trial < 20; ++trial) {
            Rng local = Rng::derive(13, trial);
            const Tensor t = random_rank_sum(3, 3, 3, 4, local);
            CHECK(strassen_P(t).determinant() == 0);
        }
    }
    SUBCASE("minor vanishing is stable under mode-2 basis change") {
        Rng local(17);
        const Tensor t = random_rank_sum(3, 3, 3, 4, local);
        REQUIRE(strassen_P(t).determinant() == 0);
        for (int trial = 0; trial < 20; ++trial) {
            const RatMatrix g = random_invertible(3, local);
            const Tensor moved = change_basis_mode(t, 1, g);
            CHECK(strassen_P(moved).determinant() == 0);
        }
    }
}

TEST_CASE("degree-9 invariant") {
    SUBCASE("zero on 1000 random rank-4 tensors") {
        for (int trial = 0; trial < 1000; ++trial) {
            Rng rng = Rng::derive(19, trial);
            const Tensor t = random_rank_sum(3, 3, 3, 4, rng);
            CHECK(degree9_invariant(t) == 0);
        }
    }
    SUBCASE("nonzero on a random dense tensor") {
        Rng rng(23);
        const Tensor t = random_dense({3, 3, 3}, rng);
        CHECK(degree9_invariant(t) != 0);
    }
    SUBCASE("homogeneous of degree nine") {
        Rng rng(29);
        const Tensor t = random_dense({3, 3, 3}, rng);
        const Rat base = degree9_invariant(t);
        for (int trial = 0; trial < 5; ++trial) {
            const Rat lambda = Rat(rng.uniform(1, 9)) / Rat(rng.uniform(1, 9));
            CHECK(degree9_invariant(t.scaled(lambda)) == base * rat_pow(lambda, 9));
        }
    }
    SUBCASE("verdict is invariant under a generic mode-1 basis change") {
        Rng rng(31);
        const Tensor zero_case = random_rank_sum(3, 3, 3, 4, rng);
        const Tensor dense = random_dense({3, 3, 3}, rng);
        for (int trial = 0; trial < 5; ++trial) {
            const RatMatrix g = random_invertible(3, rng);
            CHECK(degree9_invariant(change_basis_mode(zero_case, 0, g)) == 0);
            CHECK(degree9_invariant(change_basis_mode(dense, 0, g)) != 0);
        }
    }
    SUBCASE("indeterminate evaluation after exhausting basis changes") {
        // every slice combination is singular for the zero tensor
        CHECK_THROWS_AS(degree9_invariant(Tensor({3, 3, 3})), std::runtime_error);
    }
    SUBCASE("det X divides det P on integer samples") {
        // Observed empirically, exercised here on exact integer tensors.
        for (int trial = 0; trial < 50; ++trial) {
            Rng rng = Rng::derive(37, trial);
            const Tensor t = random_dense({3, 3, 3}, rng);
            RatMatrix X(3, 3);
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) X(j, k) = t.at({0, j, k});
            const Rat dx = X.determinant();
            if (dx == 0) continue;
            const Rat dp = strassen_P(t).determinant();
            const Rat q = dp / dx;
            CHECK(q.get_den() == 1);
        }
    }
}

TEST_CASE("generalized rank conditions") {
    SUBCASE("vanish on random tensors of rank s+t") {
        Rng seed_gen(41);
        for (int b = 2; b <= 4; ++b)
            for (int s = 1; s <= 3; ++s)
                for (int u = 1; u <= 3; ++u) {
                    if (s + u > b || s + u > 4) continue;
                    for (int trial = 0; trial < 25; ++trial) {
                        Rng rng = Rng::derive(1000 * b + 100 * s + 10 * u, trial);
                        const Tensor t = random_rank_sum(3, b, b, s + u, rng);
                        const Tensor diff = generalized_strassen(
                            t, s, u, random_covector(3, rng), random_covector(3, rng),
                            random_covector(3, rng));
                        CHECK(diff.is_zero());
                    }
                }
    }
    SUBCASE("nonzero on a generic dense tensor at s=1, t=2, b=3") {
        Rng rng(43);
        const Tensor t = random_dense({3, 3, 3}, rng);
        const Tensor diff = generalized_strassen(t, 1, 2, random_covector(3, rng),
                                                 random_covector(3, rng),
                                                 random_covector(3, rng));
        CHECK_FALSE(diff.is_zero());
    }
    SUBCASE("budget") {
        Rng rng(47);
        const Tensor t = random_dense({3, 3, 3}, rng);
        CHECK_THROWS_AS(generalized_strassen(t, 2, 2, random_covector(3, rng),
                                             random_covector(3, rng),
                                             random_covector(3, rng)),
                        std::invalid_argument);
    }
}

TEST_CASE("border rank bound report") {
    SUBCASE("W state: flattening 2, commutator inapplicable") {
        const auto rep = border_rank_bounds(w_state());
        CHECK(rep.flattening == 2);
        CHECK_FALSE(rep.commutator.has_value());
        CHECK(rep.best == 2);
    }
    SUBCASE("2x2 multiplication: commutator wins with 6") {
        const auto rep = border_rank_bounds(matmul_tensor(2, 2, 2));
        CHECK(rep.flattening == 4);
        REQUIRE(rep.commutator.has_value());
        CHECK(*rep.commutator == 6);
        CHECK(rep.best == 6);
        CHECK(rep.best_method() == "commutator");
    }
    SUBCASE("rank one") {
        const auto rep = border_rank_bounds(outer({{Rat(1), Rat(2)}, {Rat(1), Rat(1)},
                                                   {Rat(3), Rat(1)}}));
        CHECK(rep.best == 1);
    }
    SUBCASE("bounds stay below literature upper bounds") {
        auto rep2 = border_rank_bounds(matmul_tensor(2, 2, 2));
        CHECK(rep2.best <= 7);
        auto rep3 = border_rank_bounds(matmul_tensor(3, 3, 3));
        CHECK(rep3.best == 14);
        CHECK(rep3.best <= 21);
        // rectangular case: sound against the known rank value 11
        auto rep223 = border_rank_bounds(matmul_tensor(2, 2, 3));
        CHECK(rep223.best <= 11);
        CHECK(rep223.best >= 6);
    }
}

TEST_CASE("orbit classification of 2x2x2 tensors") {
    Rng rng(53);
    SUBCASE("representatives") {
        CHECK(classify_222(outer({{Rat(1), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}})) ==
              PencilClass::S);
        CHECK(classify_222(w_state()) == PencilClass::W);
        CHECK(classify_222(ghz_state()) == PencilClass::GHZ);
        Tensor b({2, 2, 2});
        b.at({0, 0, 0}) = 1;
        b.at({1, 0, 1}) = 1;  // b1 (x) (a1 c1 + a2 c2): rank one only in mode 2
        CHECK(classify_222(b) == PencilClass::B);
        CHECK_THROWS_AS(classify_222(Tensor({2, 2, 2})), std::invalid_argument);
    }
    SUBCASE("random sample is dominated by GHZ and classes are invariant") {
        int counts[4] = {0, 0, 0, 0};
        for (int trial = 0; trial < 1000; ++trial) {
            Rng local = Rng::derive(59, trial);
            Tensor t({2, 2, 2});
            bool nz = false;
            for (std::size_t i = 0; i < t.size(); ++i) {
                t[i] = Rat(local.uniform(-9, 9));
                nz = nz || t[i] != 0;
            }
            if (!nz) continue;
            counts[static_cast<int>(classify_222(t))]++;
        }
        CHECK(counts[3] > 900);  // GHZ is the generic class
        for (int trial = 0; trial < 30; ++trial) {
            Rng local = Rng::derive(61, trial);
            Tensor t({2, 2, 2});
            for (std::size_t i = 0; i < t.size(); ++i) t[i] = Rat(local.uniform(-9, 9));
            if (t.is_zero()) continue;
            const auto cls = classify_222(t);
            Tensor moved = t;
            for (int m = 0; m < 3; ++m)
                moved = change_basis_mode(moved, m, random_invertible(2, local));
            CHECK(classify_222(moved) == cls);
        }
    }
}

TEST_CASE("tree topology necessary condition") {
    Rng rng(67);
    SUBCASE("sums of four rank ones pass every topology") {
        Tensor t({4, 4, 4, 4});
        for (int i = 0; i < 4; ++i)
            t += outer({random_covector(4, rng, -9, 9), random_covector(4, rng, -9, 9),
                        random_covector(4, rng, -9, 9), random_covector(4, rng, -9, 9)});
        for (auto topo : {PhyloTopology::T12_34, PhyloTopology::T13_24, PhyloTopology::T14_23})
            CHECK(phylo_necessary(t, topo).compatible);
    }
    SUBCASE("random dense tensors fail every topology") {
        Tensor t({4, 4, 4, 4});
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = Rat(rng.uniform(-9, 9));
        for (auto topo : {PhyloTopology::T12_34, PhyloTopology::T13_24, PhyloTopology::T14_23})
            CHECK_FALSE(phylo_necessary(t, topo).compatible);
    }
    SUBCASE("structure across one split only") {
        // sum of 4 terms M_i (x) N_i with M_i in A1 (x) A2, N_i in A3 (x) A4
        Tensor t({4, 4, 4, 4});
        for (int term = 0; term < 4; ++term) {
            Tensor m({4, 4}), n({4, 4});
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = Rat(rng.uniform(-9, 9));
            for (std::size_t i = 0; i < n.size(); ++i) n[i] = Rat(rng.uniform(-9, 9));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k)
                        for (int l = 0; l < 4; ++l)
                            t.at({i, j, k, l}) += m.at({i, j}) * n.at({k, l});
        }
        CHECK(phylo_necessary(t, PhyloTopology::T12_34).compatible);
        CHECK_FALSE(phylo_necessary(t, PhyloTopology::T13_24).compatible);
        CHECK_FALSE(phylo_necessary(t, PhyloTopology::T14_23).compatible);
    }
    SUBCASE("shape is checked") {
        CHECK_THROWS_AS(phylo_necessary(w_state(), PhyloTopology::T12_34),
                        std::invalid_argument);
    }
}
