#include <random>

#include <gtest/gtest.h>

#include "chipfire/chipfire.hpp"
#include "chipfire/errors.hpp"

using namespace chipfire;

namespace {

// Independent reachability via Floyd-Warshall closure.
bool closure_strongly_connected(const DirectedMultigraph& g) {
    std::size_t n = g.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = i == j || g.arcs[i][j] > 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    for (auto& row : r)
        for (bool b : row)
            if (!b) return false;
    return true;
}

std::vector<DirectedMultigraph> strong_fixtures() {
    return {fixtures::t3(),
            fixtures::b2(),
            fixtures::p3(),
            fixtures::k4u(),
            associated_digraph(fixtures::ex_a()),
            associated_digraph(fixtures::ex_b()),
            associated_digraph(fixtures::ex_c()),
            associated_digraph(fixtures::even_cycle(3))};
}

}  // namespace

TEST(BuildDigraph, T3) {
    auto g = fixtures::t3();
    EXPECT_EQ(g.arcs[0][1], 1);
    EXPECT_EQ(g.arcs[1][2], 1);
    EXPECT_EQ(g.arcs[2][0], 1);
    EXPECT_EQ(g.arcs[1][0], 0);
}

TEST(BuildDigraph, DuplicatesSum) {
    auto g = build_digraph({{0, 1, 1}, {1, 0, 1}, {1, 0, 1}});
    EXPECT_EQ(g.arcs[1][0], 2);
    EXPECT_EQ(g.arcs, fixtures::b2().arcs);
}

TEST(BuildDigraph, Rejections) {
    EXPECT_THROW(build_digraph({{0, 0, 1}}), InvalidGraph);
    EXPECT_THROW(build_digraph({}), InvalidGraph);
    EXPECT_THROW(build_digraph({{0, 1, 0}}), InvalidGraph);
    EXPECT_THROW(build_digraph({{0, 3, 1}}, 2), InvalidGraph);
}

TEST(StrongConnectivity, Examples) {
    EXPECT_TRUE(is_strongly_connected(fixtures::t3()));
    EXPECT_FALSE(is_strongly_connected(build_digraph({{0, 1, 1}})));
    auto exa = associated_digraph(fixtures::ex_a());
    EXPECT_TRUE(is_strongly_connected(exa));
    EXPECT_TRUE(closure_strongly_connected(exa));
}

TEST(StrongConnectivity, AgreesWithClosureOnRandomDigraphs) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng() % 4;
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && rng() % 3 == 0) arcs.push_back({i, j, 1});
        if (arcs.empty()) continue;
        auto g = build_digraph(arcs, n);
        EXPECT_EQ(is_strongly_connected(g), closure_strongly_connected(g));
    }
}

TEST(PeriodVector, Examples) {
    EXPECT_EQ(period_vector(fixtures::t3()), (Vec{1, 1, 1}));
    EXPECT_EQ(period_vector(fixtures::b2()), (Vec{2, 1}));
    EXPECT_EQ(period_vector(associated_digraph(fixtures::even_cycle(2))), (Vec{1, 2, 1, 2}));
    EXPECT_THROW(period_vector(build_digraph({{0, 1, 1}})), NotStronglyConnected);
}

TEST(PeriodVector, KernelPrimitivePositive) {
    for (const auto& g : strong_fixtures()) {
        auto r = period_vector(g);
        auto q = laplacian(g);
        std::int64_t common = 0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < g.size(); ++i) s += q[i][j] * r[i];
            EXPECT_EQ(s, 0);
            EXPECT_GE(r[j], 1);
            common = std::gcd(common, r[j]);
        }
        EXPECT_EQ(common, 1);
    }
}

TEST(PeriodVector, AssociatedDigraphRecoversMultiplicities) {
    for (const auto& ag : {fixtures::ex_a(), fixtures::ex_b(), fixtures::ex_c(), euclidean_star(5, 3)})
        EXPECT_EQ(period_vector(associated_digraph(ag)), ag.multiplicities);
}

TEST(Laplacian, Examples) {
    EXPECT_EQ(laplacian(fixtures::t3()), (Matrix{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));
    EXPECT_EQ(laplacian(fixtures::b2()), (Matrix{{1, -1}, {-2, 2}}));
    EXPECT_EQ(laplacian(fixtures::p3()), (Matrix{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
}

TEST(Laplacian, RowSumsVanish) {
    for (const auto& g : strong_fixtures())
        for (const auto& row : laplacian(g)) {
            std::int64_t s = 0;
            for (auto x : row) s += x;
            EXPECT_EQ(s, 0);
        }
}

TEST(LatticeMembership, Examples) {
    auto game = row_game(fixtures::t3());
    for (const auto& g : game.lattice.generators()) EXPECT_TRUE(game.lattice.contains(g));
    EXPECT_TRUE(game.lattice.contains(Vec{0, 0, 0}));
    EXPECT_FALSE(game.lattice.contains(Vec{1, 0, 0}));
    EXPECT_FALSE(game.lattice.contains(QVec{mpq_class(1, 2), mpq_class(-1, 2), 0}));
    EXPECT_TRUE(lattice_membership(game.lattice, QVec{1, -1, 0}));
    EXPECT_EQ(game.lattice.rank(), 2u);
}

TEST(LatticeMembership, ClosedUnderNegationAndAddition) {
    std::mt19937 rng(11);
    for (const auto& g : strong_fixtures()) {
        auto game = row_game(g);
        const auto& gens = game.lattice.generators();
        std::size_t n = g.size();
        for (int trial = 0; trial < 50; ++trial) {
            Vec a(n, 0), b(n, 0);
            for (const auto& gen : gens) {
                std::int64_t ca = static_cast<std::int64_t>(rng() % 7) - 3;
                std::int64_t cb = static_cast<std::int64_t>(rng() % 7) - 3;
                for (std::size_t i = 0; i < n; ++i) {
                    a[i] += ca * gen[i];
                    b[i] += cb * gen[i];
                }
            }
            Vec neg(n), sum(n), off = a;
            for (std::size_t i = 0; i < n; ++i) {
                neg[i] = -a[i];
                sum[i] = a[i] + b[i];
            }
            off[trial % n] += 1;
            EXPECT_TRUE(game.lattice.contains(a));
            EXPECT_TRUE(game.lattice.contains(neg));
            EXPECT_TRUE(game.lattice.contains(sum));
            EXPECT_FALSE(game.lattice.contains(off));
            EXPECT_EQ(game.lattice.residue(a), Vec(n, 0));
        }
    }
}

TEST(LatticeMembership, ResidueAgreesWithReducedRepresentatives) {
    auto game = chip_game(fixtures::ex_b());
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Vec a(6), b(6);
        for (auto& x : a) x = static_cast<std::int64_t>(rng() % 7) - 3;
        for (auto& x : b) x = static_cast<std::int64_t>(rng() % 7) - 3;
        bool same_reps = all_reduced_representatives(game, 0, a) == all_reduced_representatives(game, 0, b);
        EXPECT_EQ(game.lattice.residue(a) == game.lattice.residue(b), same_reps);
        Vec d(6);
        for (std::size_t i = 0; i < 6; ++i) d[i] = a[i] - b[i];
        EXPECT_EQ(game.lattice.contains(d), same_reps);
    }
}

TEST(ScaleLattice, IdentityAndCoordinatewise) {
    auto game = row_game(fixtures::b2());
    auto same = scale_lattice(game.lattice, Vec{1, 1});
    EXPECT_EQ(same.generators(), game.lattice.generators());
    auto scaled = scale_lattice(game.lattice, Vec{2, 1});
    // Column 0 of B2's Q^T is (1, -1).
    EXPECT_EQ(game.lattice.generators()[0], (Vec{1, -1}));
    EXPECT_EQ(scaled.generators()[0], (Vec{2, -1}));
}

TEST(ScaleLattice, ChipGameOfEXCLandsInLambdaOne) {
    auto ag = fixtures::ex_c();
    auto scaled = scale_lattice(chip_game_lattice(ag), ag.multiplicities);
    for (const auto& g : scaled.generators()) EXPECT_EQ(g[0] + g[1] + g[2], 0);
}

TEST(ScaleLattice, MembershipTransportsAndInverts) {
    std::mt19937 rng(5);
    for (const auto& ag : {fixtures::ex_a(), fixtures::ex_c(), fixtures::even_cycle(2)}) {
        auto L = chip_game_lattice(ag);
        const auto& R = ag.multiplicities;
        auto scaled = L.scaled(R);
        std::size_t n = R.size();
        for (int trial = 0; trial < 200; ++trial) {
            Vec x(n), rx(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<std::int64_t>(rng() % 9) - 4;
                rx[i] = R[i] * x[i];
            }
            EXPECT_EQ(scaled.contains(rx), L.contains(x));
            // Undo the scaling with rational inverse weights.
            QVec back(n);
            for (std::size_t i = 0; i < n; ++i) back[i] = mpq_class(rx[i], R[i]);
            EXPECT_EQ(L.contains(back), L.contains(x));
        }
    }
}
