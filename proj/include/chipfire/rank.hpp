#pragma once

#include <unordered_map>

#include "chipfire/reduction.hpp"

namespace chipfire {

constexpr double kDefaultBudget = 1e7;

bool in_sigma(const Game& game, std::size_t v0, const Divisor& D);
bool is_extreme(const Game& game, std::size_t v0, const Divisor& D);

// Rank with a memo keyed by lattice class; reuse one solver for many queries.
class RankSolver {
public:
    RankSolver(const Game& game, std::size_t v0) : game_(game), v0_(v0) {}
    std::int64_t rank(const Divisor& D);
    std::size_t memo_size() const { return memo_.size(); }

private:
    const Game& game_;
    std::size_t v0_;
    std::unordered_map<Vec, std::int64_t, VecHash> memo_;
};

std::int64_t rank(const Game& game, std::size_t v0, const Divisor& D);

struct ExtremeClass {
    Divisor rep;
    std::vector<Divisor> all_reps;
    std::int64_t degree = 0;
};

struct ExtremeClassSet {
    std::vector<ExtremeClass> classes;
    std::int64_t g_min = 0;
    std::int64_t g_max = 0;
};

double extreme_candidate_count(const Game& game, std::size_t v0);
ExtremeClassSet enumerate_extremes(const Game& game, std::size_t v0, double budget = kDefaultBudget);

// Bounded cross-check: min over classes and translates M f of the reduced form, |f_i| <= box.
std::int64_t rank_via_extremes(const Game& game, std::size_t v0, const ExtremeClassSet& ext,
                               const Divisor& D, std::int64_t box);

}  // namespace chipfire
