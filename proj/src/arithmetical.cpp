#include "chipfire/arithmetical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "chipfire/errors.hpp"

namespace chipfire {

ArithmeticalGraph validate_arithmetical(std::size_t vertices, const std::vector<Edge>& edges, const Vec& R) {
    Matrix adj(vertices, Vec(vertices, 0));
    for (const auto& e : edges) {
        if (e.a >= vertices || e.b >= vertices) throw InvalidGraph("edge endpoint out of range");
        if (e.a == e.b) throw InvalidGraph("loop at vertex " + std::to_string(e.a));
        if (e.multiplicity < 1) throw InvalidGraph("edge multiplicity must be at least 1");
        adj[e.a][e.b] = checked_add(adj[e.a][e.b], e.multiplicity);
        adj[e.b][e.a] = adj[e.a][e.b];
    }
    return validate_arithmetical(adj, R);
}

ArithmeticalGraph validate_arithmetical(const Matrix& adjacency, const Vec& R) {
    std::size_t n = adjacency.size();
    if (n < 2) throw InvalidGraph("arithmetical graph needs at least two vertices");
    if (R.size() != n) throw DimensionError("multiplicity vector dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency[i].size() != n) throw InvalidGraph("adjacency matrix is not square");
        if (adjacency[i][i] != 0) throw InvalidGraph("loop at vertex " + std::to_string(i));
        if (R[i] < 1) throw InvalidGraph("multiplicities must be positive");
        for (std::size_t j = 0; j < n; ++j)
            if (adjacency[i][j] != adjacency[j][i] || adjacency[i][j] < 0)
                throw InvalidGraph("adjacency must be symmetric and nonnegative");
    }
    DirectedMultigraph g{adjacency};
    if (!is_strongly_connected(g)) throw InvalidGraph("base graph is not connected");

    std::int64_t common = 0;
    for (auto r : R) common = std::gcd(common, r);
    if (common != 1) throw NotPrimitive("gcd of multiplicities is " + std::to_string(common));

    ArithmeticalGraph ag{adjacency, R, Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s = checked_add(s, checked_mul(adjacency[i][j], R[j]));
        if (s % R[i] != 0)
            throw NotArithmetical("neighbour sum " + std::to_string(s) + " at vertex " + std::to_string(i) +
                                  " is not divisible by " + std::to_string(R[i]));
        ag.deltas[i] = s / R[i];
    }
    return ag;
}

std::int64_t g0(const ArithmeticalGraph& ag) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < ag.size(); ++i)
        s = checked_add(s, checked_mul(ag.multiplicities[i], ag.deltas[i] - 2));
    if (s % 2 != 0) throw std::logic_error("2 g0 - 2 is odd");
    return s / 2 + 1;
}

DirectedMultigraph associated_digraph(const ArithmeticalGraph& ag) {
    std::size_t n = ag.size();
    DirectedMultigraph g;
    g.arcs.assign(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.arcs[i][j] = checked_mul(ag.adjacency[i][j], ag.multiplicities[j]);
    return g;
}

Game chip_game(const ArithmeticalGraph& ag) {
    std::size_t n = ag.size();
    Matrix q(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = i == j ? ag.deltas[i] : -ag.adjacency[i][j];
    return make_game(std::move(q), ag.multiplicities, ag.multiplicities, "chip");
}

LatticeHandle chip_game_lattice(const ArithmeticalGraph& ag) { return chip_game(ag).lattice; }

bool column_rr_always(const ArithmeticalGraph& ag, double budget) {
    return rr_verdict(column_game(associated_digraph(ag)), 0, budget).rr_property;
}

EuclideanSequence euclidean_sequence(std::int64_t r0, std::int64_t r1) {
    if (!(r0 > r1 && r1 >= 1)) throw std::invalid_argument("euclidean sequence needs r0 > r1 >= 1");
    EuclideanSequence s{{r0, r1}, {}};
    while (true) {
        auto prev = s.values[s.values.size() - 2], cur = s.values.back();
        if (prev % cur == 0) {
            s.deltas.push_back(prev / cur);
            break;
        }
        std::int64_t delta = prev / cur + 1;
        s.deltas.push_back(delta);
        s.values.push_back(delta * cur - prev);
    }
    return s;
}

namespace {

// Digit search over t_1..t_m; `open` marks a run t_i = delta_i - 1 followed by delta_k - 2 entries.
class GoodRepSearch {
public:
    GoodRepSearch(std::int64_t r0, std::int64_t r1) : seq_(euclidean_sequence(r0, r1)) {}

    std::size_t count(std::size_t k, std::int64_t rest, bool open) {
        std::size_t m = seq_.deltas.size();
        if (k == m) return rest == 0 ? 1 : 0;
        auto key = std::make_tuple(k, rest, open);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::size_t total = 0;
        auto r = seq_.values[k + 1], d = seq_.deltas[k];
        for (std::int64_t t = 0; t <= d - 1 && t * r <= rest; ++t) {
            if (open && t == d - 1) continue;
            total += count(k + 1, rest - t * r, t == d - 1 || (open && t == d - 2));
        }
        memo_.emplace(key, total);
        return total;
    }

    Vec first(std::int64_t x) {
        Vec t;
        std::int64_t rest = x;
        bool open = false;
        for (std::size_t k = 0; k < seq_.deltas.size(); ++k) {
            auto r = seq_.values[k + 1], d = seq_.deltas[k];
            for (std::int64_t c = 0; c <= d - 1; ++c) {
                if (open && c == d - 1) continue;
                bool next_open = c == d - 1 || (open && c == d - 2);
                if (c * r <= rest && count(k + 1, rest - c * r, next_open) > 0) {
                    t.push_back(c);
                    rest -= c * r;
                    open = next_open;
                    break;
                }
            }
        }
        return t;
    }

private:
    EuclideanSequence seq_;
    std::map<std::tuple<std::size_t, std::int64_t, bool>, std::size_t> memo_;
};

}  // namespace

std::size_t count_good_representations(std::int64_t r0, std::int64_t r1, std::int64_t x) {
    if (x < 0) return 0;
    GoodRepSearch s(r0, r1);
    return s.count(0, x, false);
}

std::optional<Vec> good_representation(std::int64_t r0, std::int64_t r1, std::int64_t x) {
    if (std::gcd(r0, r1) != 1) throw std::invalid_argument("good representations need gcd(r0, r1) = 1");
    if (x < 0) return std::nullopt;
    GoodRepSearch s(r0, r1);
    if (s.count(0, x, false) == 0) return std::nullopt;
    return s.first(x);
}

ArithmeticalGraph euclidean_star(std::int64_t r0, std::int64_t r1) {
    auto seq = euclidean_sequence(r0, r1);
    std::size_t m = seq.values.size() - 1;
    std::size_t n = 1 + static_cast<std::size_t>(r0) * m;
    std::vector<Edge> edges;
    Vec R(n);
    R[0] = r0;
    for (std::size_t c = 0; c < static_cast<std::size_t>(r0); ++c) {
        std::size_t prev = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            std::size_t v = 1 + c * m + (k - 1);
            R[v] = seq.values[k];
            edges.push_back({prev, v, 1});
            prev = v;
        }
    }
    return validate_arithmetical(n, edges, R);
}

std::vector<Divisor> staircase_divisors(std::int64_t r0, std::int64_t r1) {
    auto seq = euclidean_sequence(r0, r1);
    std::size_t m = seq.values.size() - 1;
    std::size_t n = 1 + static_cast<std::size_t>(r0) * m;
    std::vector<Vec> reps;
    for (std::int64_t x = 0; x < r0; ++x) reps.push_back(*good_representation(r0, r1, x));
    std::vector<std::size_t> label(static_cast<std::size_t>(r0));
    std::iota(label.begin(), label.end(), 0);
    std::set<Divisor> out;
    do {
        Divisor S(n, 0);
        S[0] = -1;
        for (std::size_t c = 0; c < label.size(); ++c)
            for (std::size_t k = 0; k < m; ++k) S[1 + c * m + k] = reps[label[c]][k];
        out.insert(S);
    } while (std::next_permutation(label.begin(), label.end()));
    return {out.begin(), out.end()};
}

GmaxReport gmax_bound_check(const ArithmeticalGraph& ag, double budget) {
    Game game = chip_game(ag);
    auto ext = enumerate_extremes(game, 0, budget);
    GmaxReport rep;
    rep.g_max = ext.g_max;
    rep.g0 = g0(ag);
    rep.bound_holds = rep.g_max <= rep.g0;
    if (rep.g_max == rep.g0) {
        rep.pairing_checked = true;
        std::set<Vec> top;
        for (const auto& c : ext.classes)
            if (c.degree == ext.g_max - 1) top.insert(game.lattice.residue(c.rep));
        for (const auto& c : ext.classes) {
            if (c.degree != ext.g_max - 1) continue;
            Divisor partner(game.size());
            for (std::size_t i = 0; i < partner.size(); ++i) partner[i] = ag.deltas[i] - 2 - c.rep[i];
            if (!is_extreme(game, 0, partner) || !top.count(game.lattice.residue(partner))) rep.pairing_holds = false;
        }
    }
    return rep;
}

}  // namespace chipfire
