#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "tenslab/decomposition.hpp"
#include "tenslab/rng.hpp"
#include "tenslab/separation.hpp"

using namespace tenslab;

TEST_CASE("matmul tensor") {
    const Tensor m111 = matmul_tensor(1, 1, 1);
    CHECK(m111.shape() == std::vector<int>{1, 1, 1});
    CHECK(m111.at({0, 0, 0}) == 1);

    const Tensor m222 = matmul_tensor(2, 2, 2);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < m222.size(); ++i)
        if (m222[i] != 0) ++nonzero;
    CHECK(nonzero == 8);

    CHECK(multilinear_ranks(matmul_tensor(2, 2, 3)) ==
          std::vector<std::size_t>{4, 6, 6});
}

TEST_CASE("catalog entries verify against their targets with the printed term counts") {
    const std::map<std::string, std::size_t> expected_counts = {
        {"standard-2x2", 8}, {"strassen-2x2", 7},     {"waksman-2x2x3", 10},
        {"bini-partial-2x2", 5}, {"w-state-eps", 2}};
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto d = catalog(name);
        REQUIRE(expected_counts.count(name) == 1);
        CHECK(d.length() == expected_counts.at(name));

        const Tensor target = catalog_target(name);
        if (auto v = catalog_vsplit(name)) {
            CHECK(mult_complexity_verify(*v, target));
        } else if (d.eps_free()) {
            CHECK(verify_exact(d, target));
        } else {
            CHECK(verify_border(d, target).ok);
        }
    }
}

TEST_CASE("unknown catalog names list the available entries") {
    CHECK_THROWS_WITH_AS(catalog("laderman-3x3"), doctest::Contains("strassen-2x2"),
                         std::invalid_argument);
}

TEST_CASE("assemble") {
    SUBCASE("empty decomposition is the zero tensor") {
        Decomposition d;
        d.shape = {2, 2};
        CHECK(assemble(d).is_zero());
    }
    SUBCASE("strassen assembles to matrix multiplication") {
        CHECK(eps_limit(assemble(catalog("strassen-2x2"))) == matmul_tensor(2, 2, 2));
    }
    SUBCASE("a flipped sign breaks the identity") {
        auto d = catalog("strassen-2x2");
        d.terms[3].factors[2][0] = EpsScalar(Rat(-1));
        CHECK_FALSE(verify_exact(d, matmul_tensor(2, 2, 2)));
    }
}

TEST_CASE("verify_exact rejects eps-dependent input") {
    CHECK_THROWS_AS(verify_exact(catalog("w-state-eps"), w_state()), std::invalid_argument);
}

TEST_CASE("verify_border") {
    SUBCASE("W family witnesses border rank <= 2 at order 1") {
        const auto bv = verify_border(catalog("w-state-eps"), w_state());
        CHECK(bv.ok);
        REQUIRE(bv.remainder_order.has_value());
        CHECK(*bv.remainder_order == 1);
    }
    SUBCASE("an exact computation has remainder order infinity") {
        const auto bv = verify_border(catalog("strassen-2x2"), matmul_tensor(2, 2, 2));
        CHECK(bv.ok);
        CHECK_FALSE(bv.remainder_order.has_value());
    }
    SUBCASE("wrong target fails") {
        CHECK_FALSE(verify_border(catalog("w-state-eps"), ghz_state()).ok);
        CHECK_FALSE(verify_border(catalog("w-state-eps"), matmul_tensor(2, 2, 2)).ok);
    }
    SUBCASE("a divergent family is rejected with a reason") {
        auto d = catalog("w-state-eps");
        d.prefactor = EpsScalar::eps_power(-2);
        const auto bv = verify_border(d, w_state());
        CHECK_FALSE(bv.ok);
        CHECK(bv.reason.find("diverge") != std::string::npos);
    }
    SUBCASE("invariant under compensating unit rescalings of a term's factors") {
        auto d = catalog("w-state-eps");
        const EpsScalar unit = EpsScalar::eps_power(2, Rat(3, 2));
        const EpsScalar inv = EpsScalar::eps_power(-2, Rat(2, 3));
        for (auto& x : d.terms[1].factors[0]) x *= unit;
        for (auto& x : d.terms[1].factors[1]) x *= inv;
        const auto bv = verify_border(d, w_state());
        CHECK(bv.ok);
        CHECK(*bv.remainder_order == 1);
    }
}

TEST_CASE("flattening rank is bounded by the computation length across the catalog") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto d = catalog(name);
        Tensor target = catalog_target(name);
        if (catalog_vsplit(name)) continue;  // split-space entries bound a different tensor
        const int n = static_cast<int>(target.order());
        for (int mask = 1; mask < (1 << n) - 1; ++mask) {
            std::vector<int> modes;
            for (int m = 0; m < n; ++m)
                if (mask & (1 << m)) modes.push_back(m);
            CHECK(exact_rank(flatten(target, modes)) <= d.length());
        }
    }
}

TEST_CASE("multiplicative complexity certificate") {
    SUBCASE("waksman vs the 2x2x3 product") {
        const auto v = catalog_vsplit("waksman-2x2x3");
        REQUIRE(v.has_value());
        CHECK(v->decomposition.length() == 10);
        CHECK(mult_complexity_verify(*v, matmul_tensor(2, 2, 3)));
    }
    SUBCASE("published rank value is consistent with the certificate") {
        // rank 11 <= 2 * multiplicative complexity 10
        CHECK(11 <= 2 * catalog("waksman-2x2x3").length());
    }
    SUBCASE("an ordinary computation embeds block-diagonally") {
        const auto d = catalog("strassen-2x2");
        VSplitDecomposition v;
        v.split = 4;
        v.decomposition.shape = {8, 8, 4};
        v.decomposition.name = "strassen-embedded";
        for (const auto& t : d.terms) {
            RankOneTerm big;
            big.factors.assign(3, {});
            big.factors[0].assign(8, EpsScalar(Rat(0)));
            big.factors[1].assign(8, EpsScalar(Rat(0)));
            big.factors[2] = t.factors[2];
            for (int i = 0; i < 4; ++i) big.factors[0][i] = t.factors[0][i];
            for (int i = 0; i < 4; ++i) big.factors[1][4 + i] = t.factors[1][i];
            v.decomposition.terms.push_back(std::move(big));
        }
        CHECK(mult_complexity_verify(v, matmul_tensor(2, 2, 2)));
    }
    SUBCASE("deleting a term breaks the certificate") {
        auto v = catalog_vsplit("waksman-2x2x3");
        v->decomposition.terms.pop_back();
        CHECK_FALSE(mult_complexity_verify(*v, matmul_tensor(2, 2, 3)));
    }
}

namespace {

// Coordinates of the maximal right ideal of 2x2 matrices supported on the
// first row (column space contained in the first coordinate line).
std::vector<std::vector<Rat>> right_ideal_2x2() {
    return {{Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(0)}};
}

std::vector<std::vector<Rat>> full_space(int n) {
    std::vector<std::vector<Rat>> v;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> row(n, Rat(0));
        row[i] = 1;
        v.push_back(std::move(row));
    }
    return v;
}

}  // namespace

TEST_CASE("separation") {
    SUBCASE("left kernel of the full standard computation is trivial") {
        SeparationQuery q;
        q.phi = catalog("standard-2x2");
        q.a1 = full_space(4);
        const auto res = separation_check(q);
        CHECK(res.found);
        // everything can sit in phi_1
        CHECK(res.implied_bound == 4);
    }
    SUBCASE("strassen separates (right ideal, everything, 0)") {
        SeparationQuery q;
        q.phi = catalog("strassen-2x2");
        q.a1 = right_ideal_2x2();
        q.b1 = full_space(4);
        const auto res = separation_check(q);
        REQUIRE(res.found);
        CHECK(res.implied_bound == 6);
        CHECK(res.implied_bound <= q.phi.length());
        // the easy corollary bound 2 m^2 - m at m = 2
        CHECK(res.implied_bound == 2 * 4 - 2);
        // lexicographically least assignment is schedule independent
        const auto res4 = separation_check(q, 4);
        CHECK(res4.part == res.part);
    }
    SUBCASE("demanding everything valued outside all of C leaves nothing") {
        SeparationQuery q;
        q.phi = catalog("strassen-2x2");
        q.a1 = full_space(4);
        q.b1 = full_space(4);
        q.c1 = full_space(4);
        const auto res = separation_check(q);
        CHECK_FALSE(res.found);
    }
    SUBCASE("all-modes variant on a diagonal computation") {
        Decomposition d;
        d.shape = {3, 3, 3};
        d.name = "diagonal";
        for (int i = 0; i < 3; ++i) {
            RankOneTerm t;
            t.factors.assign(3, std::vector<EpsScalar>(3, EpsScalar(Rat(0))));
            for (int m = 0; m < 3; ++m) t.factors[m][i] = EpsScalar(Rat(1));
            d.terms.push_back(std::move(t));
        }
        SeparationQuery q;
        q.phi = d;
        q.all_modes = true;
        q.a1 = {{Rat(1), Rat(0), Rat(0)}};
        q.b1 = {{Rat(0), Rat(1), Rat(0)}};
        q.c1 = {{Rat(0), Rat(0), Rat(1)}};
        const auto res = separation_check(q);
        REQUIRE(res.found);
        CHECK(res.implied_bound == 3);
        CHECK(res.implied_bound <= d.length());
    }
    SUBCASE("budget") {
        SeparationQuery q;
        q.phi = standard_base(3);  // 27 terms
        CHECK_THROWS_AS(separation_check(q), std::invalid_argument);
    }
}
