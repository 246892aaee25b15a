#pragma once

#include "chipfire/riemann_roch.hpp"

namespace chipfire {

constexpr std::size_t kDefaultStepCap = 50'000'000;

bool is_stable(const Game& game, std::size_t v0, const Divisor& D);
std::pair<Divisor, FiringStrategy> stabilize(const Game& game, std::size_t v0, const Divisor& D,
                                            std::size_t step_cap = kDefaultStepCap);
bool is_recurrent(const Game& game, std::size_t v0, const Divisor& D);
// One-sided: false may mean the headroom was too small.
bool is_recurrent_oracle(const Game& game, std::size_t v0, const Divisor& D, std::int64_t headroom);
std::int64_t default_headroom(const Game& game);
std::vector<Divisor> minimal_recurrents(const Game& game, std::size_t v0, double budget = kDefaultBudget);
bool natural_rr_via_sandpile(const Game& game, std::size_t v0, double budget = kDefaultBudget);

}  // namespace chipfire
