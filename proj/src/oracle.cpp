#include "chipfire/oracle.hpp"

#include <functional>
#include <unordered_map>

#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"

namespace chipfire::oracle {

bool effective_bruteforce(const Game& game, std::size_t v0, const Divisor& D, std::int64_t box) {
    std::size_t n = game.size();
    if (D.size() != n) throw DimensionError("divisor dimension mismatch");
    FiringStrategy f(n, -box);
    f[v0] = 0;
    Divisor cur(n);
    while (true) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            std::int64_t x = D[u];
            for (std::size_t v = 0; v < n; ++v) x -= game.M[u][v] * f[v];
            ok = x >= 0;
        }
        if (ok) return true;
        bool wrapped = true;
        for (std::size_t i = n; i-- > 0;) {
            std::int64_t lo = i == v0 ? 0 : -box, hi = i == v0 ? game.period[v0] - 1 : box;
            if (f[i] < hi) {
                ++f[i];
                wrapped = false;
                break;
            }
            f[i] = lo;
        }
        if (wrapped) return false;
    }
}

bool effective_bruteforce(const DirectedMultigraph& g, Side side, const Divisor& D, std::int64_t box) {
    return effective_bruteforce(game_for(g, side), 0, D, box);
}

std::int64_t rank_bruteforce(const Game& game, std::size_t v0, const Divisor& D, std::int64_t box) {
    std::size_t n = game.size();
    std::unordered_map<Divisor, bool, VecHash> cache;
    auto effective = [&](const Divisor& x) {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        bool e = effective_bruteforce(game, v0, x, box);
        cache.emplace(x, e);
        return e;
    };
    Divisor E(n, 0);
    bool found = false;
    // Effective E of weighted degree exactly `left`, lexicographic by vertex.
    std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t i, std::int64_t left) {
        if (found) return;
        if (i == n) {
            if (left != 0) return;
            Divisor rest(n);
            for (std::size_t k = 0; k < n; ++k) rest[k] = D[k] - E[k];
            if (!effective(rest)) found = true;
            return;
        }
        for (std::int64_t c = 0; c * game.weight[i] <= left && !found; ++c) {
            E[i] = c;
            visit(i + 1, left - c * game.weight[i]);
        }
        E[i] = 0;
    };
    for (std::int64_t d = 0;; ++d) {
        visit(0, d);
        if (found) return d - 1;
    }
}

bool reduced_bruteforce(const Game& game, std::size_t v0, const Divisor& D) {
    std::size_t n = game.size();
    if (D.size() != n) throw DimensionError("divisor dimension mismatch");
    for (std::size_t v = 0; v < n; ++v)
        if (v != v0 && D[v] < 0) return false;
    bool reduced = true;
    for_each_valid_strategy(game.period, v0, [&](const FiringStrategy& f) {
        auto E = apply_firing(game, D, f);
        bool stays = true;
        for (std::size_t v = 0; v < n; ++v)
            if (v != v0 && E[v] < 0) stays = false;
        if (stays) reduced = false;
        return reduced;
    });
    return reduced;
}

}  // namespace chipfire::oracle
