#include "chipfire/sandpile.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

void require_config(const Game& game, std::size_t v0, const Divisor& D) {
    if (D.size() != game.size()) throw DimensionError("configuration dimension mismatch");
    if (v0 >= game.size()) throw DimensionError("base vertex out of range");
    for (std::size_t v = 0; v < D.size(); ++v)
        if (v != v0 && D[v] < 0) throw NotSandpileForm("configuration is negative at vertex " + std::to_string(v));
}

double stable_count(const Game& game, std::size_t v0) { return extreme_candidate_count(game, v0); }

// Visits every stable configuration with D(v0) = 0 in lexicographic order.
template <class F>
void for_each_stable(const Game& game, std::size_t v0, F&& visit) {
    std::size_t n = game.size();
    Divisor D(n, 0);
    while (true) {
        visit(D);
        bool wrapped = true;
        for (std::size_t i = n; i-- > 0;) {
            if (i == v0) continue;
            if (D[i] + 1 < game.threshold(i)) {
                ++D[i];
                wrapped = false;
                break;
            }
            D[i] = 0;
        }
        if (wrapped) return;
    }
}

}  // namespace

bool is_stable(const Game& game, std::size_t v0, const Divisor& D) {
    require_config(game, v0, D);
    for (std::size_t v = 0; v < D.size(); ++v)
        if (v != v0 && D[v] >= game.threshold(v)) return false;
    return true;
}

std::pair<Divisor, FiringStrategy> stabilize(const Game& game, std::size_t v0, const Divisor& D,
                                            std::size_t step_cap) {
    require_config(game, v0, D);
    std::size_t n = game.size();
    Divisor cur = D;
    FiringStrategy fired(n, 0);
    for (std::size_t steps = 0;; ++steps) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v0 && cur[u] >= game.threshold(u)) {
                v = u;
                break;
            }
        if (v == n) break;
        if (steps >= step_cap) throw BudgetExceeded("stabilization", static_cast<double>(steps) + 1, static_cast<double>(step_cap));
        for (std::size_t u = 0; u < n; ++u) cur[u] = checked_add(cur[u], -game.M[u][v]);
        ++fired[v];
    }
    return {cur, fired};
}

bool is_recurrent(const Game& game, std::size_t v0, const Divisor& D) {
    if (!is_stable(game, v0, D)) throw NotStable("configuration is not stable");
    Divisor nu(D.size());
    for (std::size_t v = 0; v < D.size(); ++v) nu[v] = game.threshold(v) - 1 - D[v];
    return is_reduced(game, v0, nu);
}

std::int64_t default_headroom(const Game& game) {
    std::int64_t m = 0;
    for (std::size_t v = 0; v < game.size(); ++v) m = std::max(m, game.threshold(v));
    return 2 * m;
}

bool is_recurrent_oracle(const Game& game, std::size_t v0, const Divisor& D, std::int64_t headroom) {
    if (!is_stable(game, v0, D)) throw NotStable("configuration is not stable");
    std::size_t n = game.size();
    Divisor start(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (v != v0) start[v] = game.threshold(v);
    while (true) {
        auto stable = stabilize(game, v0, start).first;
        bool same = true;
        for (std::size_t v = 0; v < n; ++v)
            if (v != v0 && stable[v] != D[v]) same = false;
        if (same) return true;
        bool wrapped = true;
        for (std::size_t i = n; i-- > 0;) {
            if (i == v0) continue;
            if (start[i] < game.threshold(i) + headroom) {
                ++start[i];
                wrapped = false;
                break;
            }
            start[i] = game.threshold(i);
        }
        if (wrapped) return false;
    }
}

std::vector<Divisor> minimal_recurrents(const Game& game, std::size_t v0, double budget) {
    double count = stable_count(game, v0);
    if (count > budget) throw BudgetExceeded("stable configuration scan", count, budget);
    std::vector<Divisor> out;
    for_each_stable(game, v0, [&](const Divisor& D) {
        if (!is_recurrent(game, v0, D)) return;
        Divisor E = D;
        for (std::size_t v = 0; v < D.size(); ++v) {
            if (v == v0 || D[v] == 0) continue;
            --E[v];
            bool still = is_recurrent(game, v0, E);
            ++E[v];
            if (still) return;
        }
        out.push_back(D);
    });
    return out;
}

bool natural_rr_via_sandpile(const Game& game, std::size_t v0, double budget) {
    std::set<std::int64_t> degrees;
    for (const auto& D : minimal_recurrents(game, v0, budget)) {
        Divisor nu(D.size());
        for (std::size_t v = 0; v < D.size(); ++v) nu[v] = game.threshold(v) - 1 - D[v];
        std::int64_t top = std::numeric_limits<std::int64_t>::min();
        for (const auto& rep : all_reduced_representatives(game, v0, nu)) top = std::max(top, rep[v0]);
        nu[v0] += -1 - top;
        Divisor partner(D.size());
        for (std::size_t v = 0; v < D.size(); ++v) partner[v] = game.threshold(v) - 2 - nu[v];
        if (!is_extreme(game, v0, nu) || !is_extreme(game, v0, partner)) return false;
        degrees.insert(degree(game.weight, partner));
    }
    return degrees.size() == 1;
}

}  // namespace chipfire
