#include <numeric>

#include <gtest/gtest.h>

#include "chipfire/chipfire.hpp"
#include "chipfire/errors.hpp"

using namespace chipfire;

TEST(Validate, UnitMultiplicitiesGiveDegrees) {
    auto ag = validate_arithmetical(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 1}}, {1, 1, 1, 1});
    EXPECT_EQ(ag.deltas, (Vec{2, 3, 3, 2}));
}

TEST(Validate, ExA) {
    auto ag = fixtures::ex_a();
    for (std::size_t i = 0; i < ag.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < ag.size(); ++j) s += ag.adjacency[i][j] * ag.multiplicities[j];
        EXPECT_EQ(s, ag.deltas[i] * ag.multiplicities[i]);
    }
    EXPECT_EQ(ag.deltas[0], 8);
}

TEST(Validate, Errors) {
    EXPECT_THROW(validate_arithmetical(2, {{0, 1, 1}}, {1, 3}), NotArithmetical);
    EXPECT_THROW(validate_arithmetical(2, {{0, 1, 2}}, {2, 2}), NotPrimitive);
    EXPECT_THROW(validate_arithmetical(3, {{0, 1, 1}}, {1, 1, 1}), InvalidGraph);
}

TEST(G0, Examples) {
    auto ag = validate_arithmetical(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 1}}, {1, 1, 1, 1});
    EXPECT_EQ(g0(ag), 5 - 4 + 1);
    EXPECT_EQ(g0(fixtures::ex_b()), 7);
    EXPECT_EQ(g0(fixtures::ex_a()), 4);
    for (int n = 2; n <= 4; ++n) EXPECT_EQ(g0(fixtures::even_cycle(n)), 1);
}

TEST(AssociatedDigraph, Examples) {
    auto ag = validate_arithmetical(3, {{0, 1, 1}, {1, 2, 1}}, {1, 1, 1});
    auto g = associated_digraph(ag);
    EXPECT_EQ(g.arcs[0][1], 1);
    EXPECT_EQ(g.arcs[1][0], 1);
    EXPECT_EQ(g.arcs[0][2], 0);
    auto tv = associated_digraph(fixtures::two_vertex(2, 3));
    EXPECT_EQ(tv.arcs[0][1], 18);
    EXPECT_EQ(tv.arcs[1][0], 12);
    EXPECT_EQ(period_vector(associated_digraph(fixtures::even_cycle(2))), (Vec{1, 2, 1, 2}));
}

TEST(AssociatedDigraph, PeriodIsMultiplicities) {
    for (const auto& ag : {fixtures::ex_a(), fixtures::ex_b(), fixtures::ex_c(), euclidean_star(5, 3),
                           fixtures::index_cycle(5)})
        EXPECT_EQ(period_vector(associated_digraph(ag)), ag.multiplicities);
}

TEST(ChipGameLattice, Examples) {
    auto L = chip_game_lattice(fixtures::ex_c());
    EXPECT_EQ(L.rank(), 2u);
    for (const auto& ag : {fixtures::ex_a(), fixtures::ex_c()}) {
        auto game = chip_game(ag);
        for (std::size_t j = 0; j < ag.size(); ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < ag.size(); ++i) s += ag.multiplicities[i] * game.M[i][j];
            EXPECT_EQ(s, 0);
        }
    }
    auto k = validate_arithmetical(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, {1, 1, 1});
    EXPECT_TRUE(chip_game_lattice(k).contains(Vec{2, -1, -1}));
}

TEST(ColumnRR, Fixtures) {
    EXPECT_TRUE(column_rr_always(fixtures::ex_a()));
    EXPECT_TRUE(column_rr_always(fixtures::ex_c()));
    EXPECT_TRUE(column_rr_always(fixtures::even_cycle(2)));
}

TEST(EuclideanSequence, Examples) {
    auto s = euclidean_sequence(5, 3);
    EXPECT_EQ(s.values, (Vec{5, 3, 1}));
    EXPECT_EQ(s.deltas, (Vec{2, 3}));
    EXPECT_EQ(euclidean_sequence(3, 2).values, (Vec{3, 2, 1}));
    EXPECT_EQ(euclidean_sequence(4, 2).values, (Vec{4, 2}));
    EXPECT_THROW(euclidean_sequence(2, 3), std::invalid_argument);
}

TEST(EuclideanSequence, RecursionAndGcd) {
    for (std::int64_t r0 = 2; r0 <= 30; ++r0)
        for (std::int64_t r1 = 1; r1 < r0; ++r1) {
            auto s = euclidean_sequence(r0, r1);
            EXPECT_EQ(s.values.back(), std::gcd(r0, r1));
            for (std::size_t i = 1; i + 1 < s.values.size(); ++i) {
                EXPECT_EQ(s.values[i + 1], s.deltas[i - 1] * s.values[i] - s.values[i - 1]);
                EXPECT_LT(s.values[i + 1], s.values[i]);
                EXPECT_GT(s.values[i + 1], 0);
            }
        }
}

TEST(GoodRepresentation, Examples) {
    EXPECT_EQ(good_representation(5, 3, 4), (Vec{1, 1}));
    EXPECT_FALSE(good_representation(5, 3, 5).has_value());
    EXPECT_EQ(good_representation(7, 4, 0), (Vec{0, 0}));
    EXPECT_EQ(good_representation(7, 3, 0), (Vec{0, 0, 0}));
    EXPECT_FALSE(good_representation(5, 3, -1).has_value());
}

TEST(GoodRepresentation, ExistsExactlyBelowR0) {
    for (std::int64_t r0 = 2; r0 <= 40; ++r0)
        for (std::int64_t r1 = 1; r1 < r0; ++r1) {
            if (std::gcd(r0, r1) != 1) continue;
            auto s = euclidean_sequence(r0, r1);
            std::int64_t top = 0;
            for (std::size_t i = 0; i < s.deltas.size(); ++i) top += (s.deltas[i] - 1) * s.values[i + 1];
            for (std::int64_t x = 0; x <= top + 1; ++x) {
                auto count = count_good_representations(r0, r1, x);
                EXPECT_EQ(count, x < r0 ? 1u : 0u) << r0 << "," << r1 << " x=" << x;
                auto rep = good_representation(r0, r1, x);
                if (!rep) continue;
                std::int64_t sum = 0;
                for (std::size_t i = 0; i < rep->size(); ++i) sum += (*rep)[i] * s.values[i + 1];
                EXPECT_EQ(sum, x);
            }
        }
}

TEST(Star, Examples) {
    auto s = euclidean_star(3, 2);
    EXPECT_EQ(s.size(), 7u);
    EXPECT_EQ(s.multiplicities, (Vec{3, 2, 1, 2, 1, 2, 1}));
    EXPECT_EQ(s.deltas[2], 2);
    auto t = euclidean_star(2, 1);
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(t.deltas, (Vec{1, 2, 2}));
    auto u = euclidean_star(5, 3);
    EXPECT_EQ(u.deltas[2], 3);
}

TEST(Staircase, Examples) {
    auto s = staircase_divisors(3, 2);
    EXPECT_EQ(s.size(), 6u);
    auto star = euclidean_star(3, 2);
    for (const auto& D : s) {
        EXPECT_EQ(D[0], -1);
        EXPECT_EQ(degree(star.multiplicities, D), 0);
    }
    EXPECT_EQ(staircase_divisors(2, 1).size(), 2u);
    auto game = chip_game(euclidean_star(2, 1));
    auto t = staircase_divisors(2, 1);
    EXPECT_TRUE(equivalent(game.lattice, t[0], t[1]));
}

TEST(Staircase, DegreeFormula) {
    for (auto [r0, r1] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {4, 3}, {5, 2}, {5, 3}}) {
        auto star = euclidean_star(r0, r1);
        for (const auto& D : staircase_divisors(r0, r1))
            EXPECT_EQ(degree(star.multiplicities, D), r0 * (r0 - 3) / 2);
    }
}

TEST(Staircase, MatchExtremesOfSmallStars) {
    for (auto [r0, r1] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {5, 2}}) {
        auto star = euclidean_star(r0, r1);
        auto game = chip_game(star);
        auto ext = enumerate_extremes(game, 0);
        std::set<Vec> extreme_keys, stair_keys;
        for (const auto& c : ext.classes) extreme_keys.insert(game.lattice.residue(c.rep));
        for (const auto& D : staircase_divisors(r0, r1)) stair_keys.insert(game.lattice.residue(D));
        EXPECT_EQ(extreme_keys, stair_keys);
        EXPECT_EQ(ext.g_min, g0(star));
        EXPECT_EQ(ext.g_max, g0(star));
        EXPECT_TRUE(rr_verdict(game, 0).rr_property);
    }
}

TEST(GmaxBound, Fixtures) {
    auto a = gmax_bound_check(fixtures::ex_a());
    EXPECT_EQ(a.g_max, 4);
    EXPECT_EQ(a.g0, 4);
    EXPECT_TRUE(a.pairing_checked);
    EXPECT_TRUE(a.ok());
    auto b = gmax_bound_check(fixtures::ex_b());
    EXPECT_LE(b.g_max, 7);
    EXPECT_TRUE(b.ok());
    for (int n = 3; n <= 6; ++n) {
        auto ag = fixtures::index_cycle(n);
        auto rep = gmax_bound_check(ag);
        EXPECT_TRUE(rep.ok()) << n;
        if (g0(ag) <= 1) EXPECT_TRUE(rr_verdict(chip_game(ag), 0).rr_property) << n;
    }
}

TEST(SingleClass, ImpliesRR) {
    for (const auto& ag : {fixtures::two_vertex(2, 3), fixtures::two_vertex(3, 5), fixtures::index_cycle(4)}) {
        auto game = chip_game(ag);
        auto rep = rr_verdict(game, 0);
        ASSERT_EQ(rep.extremes.classes.size(), 1u);
        EXPECT_TRUE(rep.rr_property);
    }
}
