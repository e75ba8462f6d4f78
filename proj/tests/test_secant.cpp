#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tenslab/decomposition.hpp"
#include "tenslab/varieties.hpp"
#include "tenslab/wedge.hpp"

using namespace tenslab;

TEST_CASE("tangent spaces") {
    SUBCASE("segre cone over a threefold") {
        const auto v = VarietySpec::segre({2, 2, 2});
        std::vector<std::vector<Rat>> p = {{Rat(1), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}};
        CHECK(span_rank(tangent_space(v, p)) == 4);
        CHECK(v.cone_dim() == 4);
    }
    SUBCASE("veronese cubics in two variables") {
        const auto v = VarietySpec::veronese(3, 2);
        CHECK(span_rank(tangent_space(v, {{Rat(1), Rat(0)}})) == 2);
    }
    SUBCASE("grassmann of planes in four space") {
        const auto v = VarietySpec::grassmann(2, 4);
        std::vector<std::vector<Rat>> p = {{Rat(1), Rat(0), Rat(0), Rat(0)},
                                           {Rat(0), Rat(1), Rat(0), Rat(0)}};
        CHECK(span_rank(tangent_space(v, p)) == 5);
        CHECK(v.cone_dim() == 5);
    }
    SUBCASE("zero parameters are rejected") {
        const auto v = VarietySpec::veronese(3, 2);
        CHECK_THROWS_AS(tangent_space(v, {{Rat(0), Rat(0)}}), std::invalid_argument);
    }
}

TEST_CASE("secant dimensions by Terracini sampling") {
    SUBCASE("segre(4,4,4) fills at r = 7") {
        const auto v = VarietySpec::segre({4, 4, 4});
        for (int r = 1; r <= 6; ++r) {
            const auto rep = secant_dim(v, r, 2, 0);
            CHECK(rep.observed == static_cast<std::size_t>(10 * r));
            CHECK(rep.defect == 0);
        }
        const auto full = secant_dim(v, 7, 2, 0);
        CHECK(full.observed == 64);
        CHECK(full.ambient == 64);
    }
    SUBCASE("segre(3,3,3) at r = 4 is a hypersurface") {
        const auto rep = secant_dim(VarietySpec::segre({3, 3, 3}), 4, 3, 0);
        CHECK(rep.observed == 26);
        CHECK(rep.expected == 27);
        CHECK(rep.defect == 1);
    }
    SUBCASE("monotone in r and stable across seeds") {
        const auto v = VarietySpec::segre({3, 3, 3});
        std::size_t prev = 0;
        for (int r = 1; r <= 5; ++r) {
            const auto rep = secant_dim(v, r, 2, 0);
            CHECK(rep.observed >= prev);
            prev = rep.observed;
        }
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            CHECK(secant_dim(v, 4, 2, seed).observed == 26);
    }
    SUBCASE("catching up of an unbalanced factor") {
        // sigma_2 of segre(2,2,4) equals sigma_2 of the 4x4 matrix pencil
        const auto three = secant_dim(VarietySpec::segre({2, 2, 4}), 2, 3, 0);
        const auto two = secant_dim(VarietySpec::segre({4, 4}), 2, 3, 0);
        CHECK(three.observed == two.observed);
    }
    SUBCASE("thread count does not change the report") {
        const auto v = VarietySpec::segre({3, 3, 3});
        CHECK(secant_dim(v, 4, 4, 9, 1).observed == secant_dim(v, 4, 4, 9, 4).observed);
    }
}

TEST_CASE("grassmann secants") {
    SUBCASE("G(3,7) has a defective last secant") {
        const auto rep = secant_dim(VarietySpec::grassmann(3, 7), 3, 3, 0);
        CHECK(rep.ambient == 35);
        CHECK(rep.expected == 35);
        CHECK(rep.observed == 34);
        CHECK(rep.defect == 1);
    }
    SUBCASE("non-defective examples in the expected range") {
        CHECK(secant_dim(VarietySpec::grassmann(3, 9), 2, 3, 0).defect == 0);
        CHECK(secant_dim(VarietySpec::grassmann(3, 10), 3, 3, 0).defect == 0);
    }
}

TEST_CASE("veronese secants and the typical Waring rank") {
    SUBCASE("printed exceptions") {
        CHECK(waring_rank(3, 5) == 8);
        CHECK(waring_rank(4, 3) == 6);
        CHECK(waring_rank(4, 4) == 10);
        CHECK(waring_rank(4, 5) == 15);
        CHECK(waring_rank(2, 6) == 6);
    }
    SUBCASE("non-exceptional values confirmed by the Terracini oracle") {
        CHECK(waring_rank(3, 3) == 4);
        const auto fill33 = secant_dim(VarietySpec::veronese(3, 3), 4, 3, 0);
        CHECK(fill33.observed == fill33.ambient);
        const auto below33 = secant_dim(VarietySpec::veronese(3, 3), 3, 3, 0);
        CHECK(below33.observed < below33.ambient);

        CHECK(waring_rank(3, 4) == 5);
        const auto fill34 = secant_dim(VarietySpec::veronese(3, 4), 5, 3, 0);
        CHECK(fill34.observed == fill34.ambient);
    }
    SUBCASE("the two printed quartic hypersurfaces") {
        const auto v43 = secant_dim(VarietySpec::veronese(4, 3), 5, 3, 0);
        CHECK(v43.defect == 1);
        const auto v44 = secant_dim(VarietySpec::veronese(4, 4), 9, 3, 0);
        CHECK(v44.defect == 1);
    }
}

TEST_CASE("closed-form dimension counts") {
    SUBCASE("fill threshold") {
        CHECK(expected_fill(4, 4, 4) == 7);
        CHECK(expected_fill(2, 2, 2) == 2);
        CHECK(expected_fill(9, 9, 9) == 30);
    }
    SUBCASE("cube segre dimensions") {
        CHECK(lickteig_dim(2, 2) == 7);
        CHECK(lickteig_dim(4, 6) == 59);
        CHECK(lickteig_dim(3, 4) == 25);  // hypersurface override
        CHECK(lickteig_dim(3, 3) == 20);
    }
    SUBCASE("quadric veronese") {
        CHECK(quadric_veronese_dim(2, 5) == 10);
        CHECK(quadric_veronese_dim(1, 7) == 7);
        CHECK_THROWS_AS(quadric_veronese_dim(6, 5), std::invalid_argument);
        // cross-check against Terracini: sigma_r(v_2(P^n)) on n+1 variables
        for (int n = 3; n <= 4; ++n)
            for (int r = 2; r <= n; ++r) {
                const auto rep = secant_dim(VarietySpec::veronese(2, n + 1), r, 3, 0);
                CHECK(static_cast<long>(rep.observed) - 1 == quadric_veronese_dim(r, n));
            }
    }
    SUBCASE("fill threshold against the sampler on non-defective shapes") {
        for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 3}, {4, 4, 4}}) {
            const long r = expected_fill(dims[0], dims[1], dims[2]);
            const auto rep =
                secant_dim(VarietySpec::segre(dims), static_cast<int>(r), 3, 0);
            CHECK(rep.observed == rep.ambient);
        }
    }
}

TEST_CASE("wedge taylor coefficients") {
    SUBCASE("independent constant curves have a nonzero order-0 wedge") {
        CurveFamily f;
        f.shape = {2, 2};
        for (int i = 0; i < 2; ++i) {
            RankOneTerm t;
            t.factors.assign(2, std::vector<EpsScalar>(2, EpsScalar(Rat(0))));
            t.factors[0][i] = EpsScalar(Rat(1));
            t.factors[1][i] = EpsScalar(Rat(1));
            f.curves.push_back(std::move(t));
        }
        CHECK_FALSE(wedge_taylor(f, 0).is_zero());
        const auto plane = limit_plane(f);
        CHECK(plane.order == 0);
        CHECK(plane.basis.size() == 2);
    }
    SUBCASE("order-1 coefficient matches the closed form for one dependency") {
        // arbitrary vectors: the identity is pure multilinear algebra
        for (int r = 2; r <= 4; ++r) {
            CAPTURE(r);
            Rng rng(100 + r);
            const int amb = 6;
            std::vector<std::vector<Rat>> base(r, std::vector<Rat>(amb));
            std::vector<std::vector<Rat>> deriv(r, std::vector<Rat>(amb));
            std::vector<Rat> c(r - 1);
            for (int i = 0; i < r - 1; ++i) {
                for (auto& x : base[i]) x = Rat(rng.uniform(-4, 4));
                for (auto& x : deriv[i]) x = Rat(rng.uniform(-4, 4));
                c[i] = Rat(rng.uniform(-3, 3));
            }
            for (auto& x : deriv[r - 1]) x = Rat(rng.uniform(-4, 4));
            for (int j = 0; j < amb; ++j) {
                base[r - 1][j] = 0;
                for (int i = 0; i < r - 1; ++i) base[r - 1][j] += c[i] * base[i][j];
            }

            std::vector<std::vector<std::vector<Rat>>> curves;
            for (int i = 0; i < r; ++i) curves.push_back({base[i], deriv[i]});
            const auto w1 = wedge_taylor_raw(curves, 1);

            // (-1)^r (c_1 x_1' + ... + c_{r-1} x_{r-1}' - x_r') ^ x_1 ^ ... ^ x_{r-1}
            std::vector<Rat> lead(amb, Rat(0));
            for (int j = 0; j < amb; ++j) {
                for (int i = 0; i < r - 1; ++i) lead[j] += c[i] * deriv[i][j];
                lead[j] -= deriv[r - 1][j];
            }
            std::vector<std::vector<std::vector<Rat>>> formula;
            formula.push_back({lead});
            for (int i = 0; i < r - 1; ++i) formula.push_back({base[i]});
            auto expect = wedge_taylor_raw(formula, 0).dense(amb);
            if (r % 2 != 0)
                for (auto& x : expect) x = -x;
            CHECK(w1.dense(amb) == expect);
        }
    }
    SUBCASE("the approximation family of the W state") {
        const auto fam = CurveFamily::from_decomposition(catalog("w-state-eps"));
        CHECK(wedge_taylor(fam, 0).is_zero());  // proportional base points
        CHECK_FALSE(wedge_taylor(fam, 1).is_zero());
        const auto plane = limit_plane(fam);
        CHECK(plane.order == 1);
        CHECK(plane.basis.size() == 2);
        CHECK(plane_contains(plane, w_state()));
    }
}

TEST_CASE("limit plane of the five-curve family") {
    const auto fam = CurveFamily::from_decomposition(catalog("bini-partial-2x2"));
    const auto plane = limit_plane(fam);
    CHECK(plane.order == 1);
    CHECK(plane.basis.size() == 5);
    CHECK(plane_contains(plane, matmul_tensor_partial(2, 2, 2, {{1, 1}})));
}

TEST_CASE("three-block bookkeeping for 3x3 multiplication") {
    const auto rep = three_block_cover_333();
    CHECK(rep.covers_entries);
    CHECK(rep.block_costs == std::vector<int>{7, 7, 7});
    CHECK(rep.total_cost == 21);
}

TEST_CASE("variety spec parsing") {
    CHECK(VarietySpec::parse("segre:3,3,3").has_value());
    CHECK(VarietySpec::parse("veronese:4,3").has_value());
    CHECK(VarietySpec::parse("grassmann:3,7").has_value());
    CHECK_FALSE(VarietySpec::parse("segre").has_value());
    CHECK_FALSE(VarietySpec::parse("cubic:2").has_value());
    CHECK_FALSE(VarietySpec::parse("grassmann:9,7").has_value());
}
