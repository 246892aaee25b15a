#pragma once

#include "chipfire/game.hpp"

namespace chipfire::oracle {

// Searches D - M f >= 0 over f(v0) in [0, P(v0)) and other |f_i| <= box.
bool effective_bruteforce(const Game& game, std::size_t v0, const Divisor& D, std::int64_t box);
bool effective_bruteforce(const DirectedMultigraph& g, Side side, const Divisor& D, std::int64_t box);
std::int64_t rank_bruteforce(const Game& game, std::size_t v0, const Divisor& D, std::int64_t box);
bool reduced_bruteforce(const Game& game, std::size_t v0, const Divisor& D);

}  // namespace chipfire::oracle
