#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tenslab/tpp.hpp"

using namespace tenslab;

TEST_CASE("group constructions validate") {
    const auto groups = FiniteGroup::all_up_to_order_12();
    CHECK(groups.size() == 24);
    int abelian = 0;
    for (const auto& g : groups) abelian += g.is_abelian();
    CHECK(abelian == 17);  // the seven non-abelian ones: D3, D4, D5, D6, Q8, Dic3, A4
}

TEST_CASE("malformed tables are rejected") {
    // identity wrong
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), std::invalid_argument);
    // not associative (and not a Latin square)
    CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 1, 1}, {2, 0, 1}}), std::invalid_argument);
}

TEST_CASE("trivial families satisfy the property on every group of order <= 12") {
    for (const auto& g : FiniteGroup::all_up_to_order_12()) {
        CAPTURE(g.name());
        std::vector<int> all(g.order());
        for (int i = 0; i < g.order(); ++i) all[i] = i;
        CHECK(tpp_check({g, {0}, {0}, {0}, {}}));
        CHECK(tpp_check({g, all, {0}, {0}, {}}));
    }
}

TEST_CASE("exhaustive search over Z/7") {
    const auto z7 = FiniteGroup::cyclic(7);
    SUBCASE("a (1,2,3) triple exists") {
        const auto found = tpp_search(z7, 1, 2, 3);
        REQUIRE(found.has_value());
        CHECK(tpp_check({z7, (*found)[0], (*found)[1], (*found)[2], {}}));
    }
    SUBCASE("no (2,2,2) triple exists") {
        CHECK_FALSE(tpp_search(z7, 2, 2, 2).has_value());
        // consistent with the abelian packing constraint nmp <= |G|
        CHECK(2 * 2 * 2 > 7);
    }
}

TEST_CASE("omega bound") {
    SUBCASE("abelian instance with nmp = |G| gives omega <= 3") {
        const auto z12 = FiniteGroup::cyclic(12);
        // sizes (1, 2, 6): difference sets {0}, {0, 6}, {-5..5} only meet at 0
        TPPInstance inst{z12, {0}, {0, 6}, {0, 1, 2, 3, 4, 5}, {}};
        REQUIRE(tpp_check(inst));
        const auto bound = tpp_omega_bound(inst);
        REQUIRE(bound.has_value());
        CHECK(*bound == doctest::Approx(3.0));

        // the (1, 1, n) family on Z/n also has nmp = |G|
        const auto z5 = FiniteGroup::cyclic(5);
        const auto b = tpp_omega_bound({z5, {0}, {0}, {0, 1, 2, 3, 4}, {}});
        REQUIRE(b.has_value());
        CHECK(*b == doctest::Approx(3.0));
    }
    SUBCASE("trivial subsets impose no constraint") {
        const auto z7 = FiniteGroup::cyclic(7);
        CHECK_FALSE(tpp_omega_bound({z7, {0}, {0}, {0}, {}}).has_value());
    }
    SUBCASE("non-abelian groups need degrees") {
        const auto d3 = FiniteGroup::dihedral(3);
        CHECK_THROWS_AS(tpp_omega_bound({d3, {0}, {0}, {0}, {}}), std::invalid_argument);
        const auto b = tpp_omega_bound({d3, {0}, {0}, {0}, {1, 1, 2}});
        CHECK_FALSE(b.has_value());  // nmp = 1, nothing binds
    }
}
