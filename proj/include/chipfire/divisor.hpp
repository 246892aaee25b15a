#pragma once

#include "chipfire/game.hpp"

namespace chipfire {

Divisor apply_firing(const Game& game, const Divisor& D, const FiringStrategy& f);
Divisor apply_firing(const DirectedMultigraph& g, Side side, const Divisor& D, const FiringStrategy& f);

std::int64_t degree(const Vec& weight, const Divisor& D);
std::int64_t degree_plus(const Vec& weight, const Divisor& D);

bool equivalent(const LatticeHandle& L, const Divisor& a, const Divisor& b);

// f - kR with k = max_i ceil(f_i / r_i) - 1.
FiringStrategy natural_form(const Vec& period, const FiringStrategy& f);

// Nonzero 0 <= f <= period with f(v0) = 0, lexicographic ascending.
void for_each_valid_strategy(const Vec& period, std::size_t v0,
                             const std::function<bool(const FiringStrategy&)>& visit);
std::vector<FiringStrategy> valid_strategies(const Vec& period, std::size_t v0);

Divisor parse_divisor(const std::string& text);

}  // namespace chipfire
