#include "chipfire/reduction.hpp"

#include <algorithm>
#include <deque>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

void require_sandpile_form(const Divisor& D, std::size_t v0, std::size_t n) {
    if (D.size() != n) throw DimensionError("divisor dimension mismatch");
    if (v0 >= n) throw DimensionError("base vertex out of range");
    for (std::size_t v = 0; v < n; ++v)
        if (v != v0 && D[v] < 0) throw NotSandpileForm("divisor is negative at vertex " + std::to_string(v));
}

}  // namespace

DharTrace dhar(const Game& game, std::size_t v0, const Divisor& D, bool record_steps) {
    std::size_t n = game.size();
    require_sandpile_form(D, v0, n);
    DharTrace t;
    FiringStrategy f = game.period;
    Divisor cur = D;
    while (true) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u) {
            if (u != v0 && cur[u] <= -1) {
                v = u;
                break;
            }
        }
        if (v == n) {
            if (f[v0] <= 0) break;
            t.reduced_witnesses.push_back(cur);
            v = v0;
        }
        --f[v];
        for (std::size_t u = 0; u < n; ++u) cur[u] += game.M[u][v];
        ++t.length;
        if (record_steps) t.steps.push_back({f, v});
    }
    t.terminal = std::move(f);
    return t;
}

bool is_reduced(const Game& game, std::size_t v0, const Divisor& D) {
    return is_zero(dhar(game, v0, D).terminal);
}

std::pair<Divisor, FiringStrategy> reduce(const Game& game, std::size_t v0, const Divisor& D) {
    std::size_t n = game.size();
    if (D.size() != n) throw DimensionError("divisor dimension mismatch");
    if (v0 >= n) throw DimensionError("base vertex out of range");

    // BFS from v0 along u -> v whenever firing u gives chips to v.
    std::vector<std::size_t> dist(n, n);
    std::deque<std::size_t> queue{v0};
    dist[v0] = 0;
    std::size_t depth = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < n; ++v) {
            if (v != u && game.M[v][u] < 0 && dist[v] == n) {
                dist[v] = dist[u] + 1;
                depth = std::max(depth, dist[v]);
                queue.push_back(v);
            }
        }
    }
    for (auto d : dist)
        if (d == n) throw NotStronglyConnected("base vertex does not reach every vertex");

    Divisor cur = D;
    FiringStrategy total(n, 0);
    for (std::size_t layer = depth; layer >= 1; --layer) {
        std::int64_t b = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] == layer) b = std::max(b, -cur[v]);
        if (b == 0) continue;
        FiringStrategy f(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            if (dist[v] < layer) f[v] = b;
        cur = apply_firing(game, cur, f);
        for (std::size_t v = 0; v < n; ++v) total[v] = checked_add(total[v], f[v]);
    }

    while (true) {
        auto t = dhar(game, v0, cur);
        if (is_zero(t.terminal)) break;
        cur = apply_firing(game, cur, t.terminal);
        for (std::size_t v = 0; v < n; ++v) total[v] = checked_add(total[v], t.terminal[v]);
    }
    return {cur, total};
}

std::vector<Divisor> all_reduced_representatives(const Game& game, std::size_t v0, const Divisor& D) {
    auto reduced = reduce(game, v0, D).first;
    auto reps = dhar(game, v0, reduced).reduced_witnesses;
    std::sort(reps.begin(), reps.end());
    return reps;
}

bool is_effective_class(const Game& game, std::size_t v0, const Divisor& D) {
    if (is_nonnegative(D)) return true;
    if (degree(game.weight, D) < 0) return false;
    for (const auto& rep : all_reduced_representatives(game, v0, D))
        if (rep[v0] >= 0) return true;
    return false;
}

bool is_gparking(const DirectedMultigraph& g, std::size_t v0, const Divisor& D) {
    std::size_t n = g.size();
    require_sandpile_form(D, v0, n);
    std::vector<bool> burnt(n, false);
    burnt[v0] = true;
    std::size_t count = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (burnt[v]) continue;
            std::int64_t into_fire = 0;
            for (std::size_t u = 0; u < n; ++u)
                if (burnt[u]) into_fire += g.arcs[v][u];
            if (into_fire > D[v]) {
                burnt[v] = true;
                ++count;
                grew = true;
            }
        }
    }
    return count == n;
}

DirectedMultigraph eulerian_transform(const DirectedMultigraph& g) {
    Vec r = period_vector(g);
    std::size_t n = g.size();
    DirectedMultigraph e;
    e.arcs.assign(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) e.arcs[i][j] = checked_mul(g.arcs[j][i], r[j]);
    return e;
}

std::pair<Divisor, FiringStrategy> column_reduce(const DirectedMultigraph& g, std::size_t v0, const Divisor& D) {
    return reduce(column_game(g), v0, D);
}

std::pair<Divisor, FiringStrategy> column_reduce_via_transform(const DirectedMultigraph& g, std::size_t v0,
                                                               const Divisor& D) {
    Vec r = period_vector(g);
    if (D.size() != g.size()) throw DimensionError("divisor dimension mismatch");
    Divisor scaled(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) scaled[i] = checked_mul(r[i], D[i]);
    auto [red, f] = reduce(row_game(eulerian_transform(g)), v0, scaled);
    Divisor out(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) {
        if (red[i] % r[i] != 0) throw std::logic_error("Eulerian transform left the scaled sublattice");
        out[i] = red[i] / r[i];
    }
    return {out, f};
}

}  // namespace chipfire
