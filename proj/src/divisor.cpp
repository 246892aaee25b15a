#include "chipfire/divisor.hpp"

#include <cctype>
#include <sstream>

#include "chipfire/errors.hpp"

namespace chipfire {

Divisor apply_firing(const Game& game, const Divisor& D, const FiringStrategy& f) {
    std::size_t n = game.size();
    if (D.size() != n || f.size() != n) throw DimensionError("divisor/strategy dimension mismatch");
    Divisor out = D;
    for (std::size_t v = 0; v < n; ++v) {
        if (f[v] == 0) continue;
        for (std::size_t u = 0; u < n; ++u) {
            if (game.M[u][v] == 0) continue;
            out[u] = checked_add(out[u], -checked_mul(game.M[u][v], f[v]));
        }
    }
    return out;
}

Divisor apply_firing(const DirectedMultigraph& g, Side side, const Divisor& D, const FiringStrategy& f) {
    std::size_t n = g.size();
    if (D.size() != n || f.size() != n) throw DimensionError("divisor/strategy dimension mismatch");
    Matrix q = laplacian(g, side);
    Divisor out = D;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            auto m = side == Side::row ? q[v][u] : q[u][v];
            out[u] = checked_add(out[u], -checked_mul(m, f[v]));
        }
    return out;
}

std::int64_t degree(const Vec& weight, const Divisor& D) {
    if (weight.size() != D.size()) throw DimensionError("divisor dimension mismatch");
    return dot(weight, D);
}

std::int64_t degree_plus(const Vec& weight, const Divisor& D) {
    if (weight.size() != D.size()) throw DimensionError("divisor dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < D.size(); ++i)
        if (D[i] > 0) s = checked_add(s, checked_mul(weight[i], D[i]));
    return s;
}

bool equivalent(const LatticeHandle& L, const Divisor& a, const Divisor& b) {
    if (a.size() != b.size()) throw DimensionError("divisor dimension mismatch");
    Vec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = checked_add(a[i], -b[i]);
    return L.contains(d);
}

FiringStrategy natural_form(const Vec& period, const FiringStrategy& f) {
    if (period.size() != f.size()) throw DimensionError("strategy dimension mismatch");
    if (is_zero(f)) throw ZeroStrategy("natural form of the zero strategy is undefined");
    std::int64_t best = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::int64_t q = f[i] / period[i];
        if (f[i] % period[i] != 0 && f[i] > 0) ++q;  // ceil
        best = i == 0 ? q : std::max(best, q);
    }
    std::int64_t k = best - 1;
    FiringStrategy out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = checked_add(f[i], -checked_mul(k, period[i]));
    return out;
}

void for_each_valid_strategy(const Vec& period, std::size_t v0,
                             const std::function<bool(const FiringStrategy&)>& visit) {
    std::size_t n = period.size();
    FiringStrategy f(n, 0);
    while (true) {
        bool wrapped = true;
        for (std::size_t i = n; i-- > 0;) {
            if (i == v0) continue;
            if (f[i] < period[i]) {
                ++f[i];
                wrapped = false;
                break;
            }
            f[i] = 0;
        }
        if (wrapped || !visit(f)) return;
    }
}

std::vector<FiringStrategy> valid_strategies(const Vec& period, std::size_t v0) {
    std::vector<FiringStrategy> out;
    for_each_valid_strategy(period, v0, [&](const FiringStrategy& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

Divisor parse_divisor(const std::string& text) {
    Divisor d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad divisor entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad divisor entry '" + item + "'");
        d.push_back(v);
    }
    if (d.empty()) throw std::invalid_argument("empty divisor");
    return d;
}

}  // namespace chipfire
