#pragma once

#include <optional>

#include "chipfire/riemann_roch.hpp"

namespace chipfire {

struct Edge {
    std::size_t a;
    std::size_t b;
    std::int64_t multiplicity;
};

struct ArithmeticalGraph {
    Matrix adjacency;  // symmetric
    Vec multiplicities;
    Vec deltas;

    std::size_t size() const { return adjacency.size(); }
};

ArithmeticalGraph validate_arithmetical(std::size_t vertices, const std::vector<Edge>& edges, const Vec& R);
ArithmeticalGraph validate_arithmetical(const Matrix& adjacency, const Vec& R);
std::int64_t g0(const ArithmeticalGraph& ag);
DirectedMultigraph associated_digraph(const ArithmeticalGraph& ag);
Game chip_game(const ArithmeticalGraph& ag);
LatticeHandle chip_game_lattice(const ArithmeticalGraph& ag);
bool column_rr_always(const ArithmeticalGraph& ag, double budget = kDefaultBudget);

struct EuclideanSequence {
    Vec values;
    // deltas[i] pairs with values[i + 1]; the last entry is the chain end r_{m-1} / r_m.
    Vec deltas;
};

EuclideanSequence euclidean_sequence(std::int64_t r0, std::int64_t r1);
std::optional<Vec> good_representation(std::int64_t r0, std::int64_t r1, std::int64_t x);
std::size_t count_good_representations(std::int64_t r0, std::int64_t r1, std::int64_t x);
ArithmeticalGraph euclidean_star(std::int64_t r0, std::int64_t r1);
std::vector<Divisor> staircase_divisors(std::int64_t r0, std::int64_t r1);

struct GmaxReport {
    std::int64_t g_max = 0;
    std::int64_t g0 = 0;
    bool bound_holds = false;
    bool pairing_checked = false;
    bool pairing_holds = true;
    bool ok() const { return bound_holds && pairing_holds; }
};

GmaxReport gmax_bound_check(const ArithmeticalGraph& ag, double budget = kDefaultBudget);

}  // namespace chipfire
