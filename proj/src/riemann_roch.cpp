#include "chipfire/riemann_roch.hpp"

#include <functional>

#include "chipfire/errors.hpp"

namespace chipfire {

QVec project(const Vec& w, const QVec& p) {
    if (w.size() != p.size()) throw DimensionError("projection dimension mismatch");
    mpq_class num = 0, den = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        num += p[i] * w[i];
        den += mpq_class(w[i]) * w[i];
    }
    mpq_class lambda = num / den;
    QVec out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] - lambda * w[i];
    return out;
}

QVec project(const Vec& w, const Vec& p) {
    QVec q(p.begin(), p.end());
    return project(w, q);
}

mpq_class delta_distance(const Vec& r, const QVec& p, const QVec& q) {
    if (r.size() != p.size() || p.size() != q.size()) throw DimensionError("distance dimension mismatch");
    mpq_class best = (q[0] - p[0]) / r[0];
    for (std::size_t i = 1; i < r.size(); ++i) best = std::max(best, mpq_class((q[i] - p[i]) / r[i]));
    return best;
}

std::vector<QVec> crit_points(const ExtremeClassSet& ext, const Vec& w) {
    std::vector<QVec> out;
    for (const auto& c : ext.classes) {
        Vec shifted = c.rep;
        for (auto& x : shifted) ++x;
        out.push_back(project(w, shifted));
    }
    return out;
}

namespace {

bool perfect_matching(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& match_of_left) {
    std::size_t m = adj.size();
    const std::size_t none = m;
    std::vector<std::size_t> match_of_right(m, none);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
        for (std::size_t k = 0; k < m; ++k) {
            if (!adj[i][k] || seen[k]) continue;
            seen[k] = true;
            if (match_of_right[k] == none || augment(match_of_right[k], seen)) {
                match_of_right[k] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<bool> seen(m, false);
        if (!augment(i, seen)) return false;
    }
    match_of_left.assign(m, none);
    for (std::size_t k = 0; k < m; ++k) match_of_left[match_of_right[k]] = k;
    return true;
}

}  // namespace

ReflectionResult reflection_invariant(const ExtremeClassSet& ext, const LatticeHandle& L, const Vec& w) {
    auto ps = crit_points(ext, w);
    std::size_t m = ps.size(), n = w.size();
    ReflectionResult res;
    if (m == 0) return res;
    for (std::size_t j = 0; j < m; ++j) {
        QVec v(n);
        for (std::size_t t = 0; t < n; ++t) v[t] = -ps[0][t] - ps[j][t];
        std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
        QVec x(n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t t = 0; t < n; ++t) x[t] = -ps[i][t] - v[t] - ps[k][t];
                adj[i][k] = L.contains(x);
            }
        std::vector<std::size_t> matching;
        if (perfect_matching(adj, matching)) {
            res.invariant = true;
            res.witness = v;
            res.matching = matching;
            return res;
        }
    }
    return res;
}

Divisor normalize_class(const Game& game, std::size_t v0, const Divisor& D) {
    return all_reduced_representatives(game, v0, D).front();
}

Divisor natural_canonical(const Game& game) {
    Divisor k(game.size());
    for (std::size_t v = 0; v < game.size(); ++v) k[v] = game.threshold(v) - 2;
    return k;
}

RRReport rr_verdict(const Game& game, std::size_t v0, double budget) {
    RRReport rep;
    rep.extremes = enumerate_extremes(game, v0, budget);
    rep.crit = crit_points(rep.extremes, game.weight);
    rep.uniform = rep.extremes.g_min == rep.extremes.g_max;
    auto refl = reflection_invariant(rep.extremes, game.lattice, game.weight);
    rep.reflection_invariant = refl.invariant;
    if (refl.invariant) {
        rep.witness = refl.witness;
        const auto& cls = rep.extremes.classes;
        Divisor best;
        std::int64_t best_degree = 0;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            Divisor k(game.size());
            for (std::size_t t = 0; t < k.size(); ++t) k[t] = cls[i].rep[t] + cls[refl.matching[i]].rep[t];
            auto d = degree(game.weight, k);
            if (i == 0 || d > best_degree) {
                best = k;
                best_degree = d;
            }
        }
        rep.reflection_canonical = normalize_class(game, v0, best);
    }
    rep.rr_property = rep.uniform && rep.reflection_invariant;
    if (rep.rr_property) {
        rep.canonical = rep.reflection_canonical;
        rep.g = rep.extremes.g_min;
        rep.natural_rr = equivalent(game.lattice, natural_canonical(game), *rep.canonical);
    }
    return rep;
}

namespace {

void for_each_in_box(std::size_t n, std::int64_t box, const std::function<bool(const Divisor&)>& visit) {
    Divisor D(n, -box);
    while (true) {
        if (!visit(D)) return;
        bool wrapped = true;
        for (std::size_t i = n; i-- > 0;) {
            if (D[i] < box) {
                ++D[i];
                wrapped = false;
                break;
            }
            D[i] = -box;
        }
        if (wrapped) return;
    }
}

Divisor minus(const Divisor& a, const Divisor& b) {
    Divisor out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace

bool rr_formula_check(const Game& game, std::size_t v0, const RRReport& report, std::int64_t box) {
    if (!report.rr_property || !report.canonical || !report.g) return false;
    RankSolver solver(game, v0);
    const auto& K = *report.canonical;
    std::int64_t g = *report.g;
    bool ok = true;
    for_each_in_box(game.size(), box, [&](const Divisor& D) {
        auto lhs = solver.rank(D) - solver.rank(minus(K, D));
        ok = lhs == degree(game.weight, D) - g + 1;
        return ok;
    });
    return ok;
}

bool canonical_inequality_check(const Game& game, std::size_t v0, const RRReport& report, std::int64_t box) {
    if (!report.reflection_invariant || !report.reflection_canonical) return false;
    RankSolver solver(game, v0);
    const auto& K = *report.reflection_canonical;
    auto gmin = report.extremes.g_min, gmax = report.extremes.g_max;
    bool ok = true;
    for_each_in_box(game.size(), box, [&](const Divisor& D) {
        auto d = degree(game.weight, D);
        auto diff = solver.rank(D) - solver.rank(minus(K, D));
        ok = d - 3 * gmax + 2 * gmin + 1 <= diff && diff <= d - gmin + 1;
        return ok;
    });
    return ok;
}

BridgeResult scaling_bridge(const Game& game, std::size_t v0, double budget) {
    BridgeResult res;
    auto original = rr_verdict(game, v0, budget);
    Game scaled = scale_game(game);
    auto other = rr_verdict(scaled, v0, budget);
    res.original_rr = original.rr_property;
    res.scaled_rr = other.rr_property;
    res.verdicts_agree = res.original_rr == res.scaled_rr;
    if (res.original_rr && res.scaled_rr) {
        Divisor transported(game.size());
        for (std::size_t i = 0; i < transported.size(); ++i)
            transported[i] = game.weight[i] * ((*original.canonical)[i] + 2) - 2;
        res.canonical_transport = equivalent(scaled.lattice, transported, *other.canonical);
    }
    return res;
}

}  // namespace chipfire
