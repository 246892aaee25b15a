#pragma once

#include <utility>

#include "chipfire/divisor.hpp"

namespace chipfire {

struct DharStep {
    FiringStrategy strategy;
    std::size_t vertex;
};

struct DharTrace {
    std::vector<DharStep> steps;
    FiringStrategy terminal;
    std::vector<Divisor> reduced_witnesses;
    std::size_t length = 0;
};

DharTrace dhar(const Game& game, std::size_t v0, const Divisor& D, bool record_steps = false);
bool is_reduced(const Game& game, std::size_t v0, const Divisor& D);
std::pair<Divisor, FiringStrategy> reduce(const Game& game, std::size_t v0, const Divisor& D);
std::vector<Divisor> all_reduced_representatives(const Game& game, std::size_t v0, const Divisor& D);
bool is_effective_class(const Game& game, std::size_t v0, const Divisor& D);

bool is_gparking(const DirectedMultigraph& g, std::size_t v0, const Divisor& D);
// Eulerian digraph with Laplacian Q^T diag(R).
DirectedMultigraph eulerian_transform(const DirectedMultigraph& g);
std::pair<Divisor, FiringStrategy> column_reduce(const DirectedMultigraph& g, std::size_t v0, const Divisor& D);
std::pair<Divisor, FiringStrategy> column_reduce_via_transform(const DirectedMultigraph& g, std::size_t v0,
                                                               const Divisor& D);

}  // namespace chipfire
