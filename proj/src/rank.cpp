#include "chipfire/rank.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "chipfire/errors.hpp"

namespace chipfire {

bool in_sigma(const Game& game, std::size_t v0, const Divisor& D) { return !is_effective_class(game, v0, D); }

bool is_extreme(const Game& game, std::size_t v0, const Divisor& D) {
    if (!in_sigma(game, v0, D)) return false;
    Divisor E = D;
    for (std::size_t v = 0; v < D.size(); ++v) {
        ++E[v];
        bool leaves = !in_sigma(game, v0, E);
        --E[v];
        if (!leaves) return false;
    }
    return true;
}

std::int64_t RankSolver::rank(const Divisor& D) {
    if (degree(game_.weight, D) < 0) return -1;
    Vec key = game_.lattice.residue(D);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t r;
    if (!is_effective_class(game_, v0_, D)) {
        r = -1;
    } else {
        r = std::numeric_limits<std::int64_t>::max();
        Divisor E = D;
        for (std::size_t v = 0; v < D.size(); ++v) {
            --E[v];
            r = std::min(r, game_.weight[v] + rank(E));
            ++E[v];
        }
    }
    memo_.emplace(std::move(key), r);
    return r;
}

std::int64_t rank(const Game& game, std::size_t v0, const Divisor& D) {
    RankSolver solver(game, v0);
    return solver.rank(D);
}

double extreme_candidate_count(const Game& game, std::size_t v0) {
    double c = 1;
    for (std::size_t v = 0; v < game.size(); ++v)
        if (v != v0) c *= static_cast<double>(game.threshold(v));
    return c;
}

namespace {

using ClassMap = std::map<std::vector<Divisor>, Divisor>;

void scan_range(const Game& game, std::size_t v0, std::uint64_t begin, std::uint64_t end, ClassMap& out) {
    std::size_t n = game.size();
    Divisor D(n, 0);
    D[v0] = -1;
    std::uint64_t rest = begin;
    for (std::size_t i = n; i-- > 0;) {
        if (i == v0) continue;
        auto radix = static_cast<std::uint64_t>(game.threshold(i));
        D[i] = static_cast<std::int64_t>(rest % radix);
        rest /= radix;
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        auto t = dhar(game, v0, D);
        if (is_zero(t.terminal)) {
            bool effective = false;
            for (const auto& w : t.reduced_witnesses)
                if (w[v0] >= 0) effective = true;
            if (!effective) {
                bool extreme = true;
                for (std::size_t v = 0; v < n && extreme; ++v) {
                    if (v == v0) continue;
                    ++D[v];
                    extreme = is_effective_class(game, v0, D);
                    --D[v];
                }
                if (extreme) {
                    auto key = t.reduced_witnesses;
                    std::sort(key.begin(), key.end());
                    auto it = out.find(key);
                    if (it == out.end()) out.emplace(std::move(key), D);
                    else if (D < it->second) it->second = D;
                }
            }
        }
        for (std::size_t i = n; i-- > 0;) {
            if (i == v0) continue;
            if (++D[i] < game.threshold(i)) break;
            D[i] = 0;
        }
    }
}

}  // namespace

ExtremeClassSet enumerate_extremes(const Game& game, std::size_t v0, double budget) {
    if (v0 >= game.size()) throw DimensionError("base vertex out of range");
    double count = extreme_candidate_count(game, v0);
    if (count > budget) throw BudgetExceeded("extreme divisor scan", count, budget);
    auto total = static_cast<std::uint64_t>(count);

    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (total < 4096) workers = 1;
    workers = std::min<std::size_t>(workers, 16);
    std::vector<ClassMap> partial(workers);
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
        std::uint64_t b = total * w / workers, e = total * (w + 1) / workers;
        threads.emplace_back([&, w, b, e] {
            try {
                scan_range(game, v0, b, e, partial[w]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    ClassMap merged;
    for (auto& part : partial)
        for (auto& [key, rep] : part) {
            auto it = merged.find(key);
            if (it == merged.end()) merged.emplace(key, rep);
            else if (rep < it->second) it->second = rep;
        }

    ExtremeClassSet out;
    for (auto& [key, rep] : merged) out.classes.push_back({rep, key, degree(game.weight, rep)});
    std::sort(out.classes.begin(), out.classes.end(),
              [](const ExtremeClass& a, const ExtremeClass& b) { return a.rep < b.rep; });
    if (!out.classes.empty()) {
        out.g_min = out.g_max = out.classes[0].degree + 1;
        for (const auto& c : out.classes) {
            out.g_min = std::min(out.g_min, c.degree + 1);
            out.g_max = std::max(out.g_max, c.degree + 1);
        }
    }
    return out;
}

std::int64_t rank_via_extremes(const Game& game, std::size_t v0, const ExtremeClassSet& ext, const Divisor& D,
                               std::int64_t box) {
    std::size_t n = game.size();
    if (D.size() != n) throw DimensionError("divisor dimension mismatch");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& cls : ext.classes) {
        Divisor base(n);
        for (std::size_t i = 0; i < n; ++i) base[i] = D[i] - cls.rep[i];
        base = reduce(game, v0, base).first;
        FiringStrategy f(n, -box);
        f[v0] = 0;
        while (true) {
            best = std::min(best, degree_plus(game.weight, apply_firing(game, base, f)));
            bool wrapped = true;
            for (std::size_t i = n; i-- > 0;) {
                std::int64_t hi = i == v0 ? game.period[v0] - 1 : box;
                std::int64_t lo = i == v0 ? 0 : -box;
                if (f[i] < hi) {
                    ++f[i];
                    wrapped = false;
                    break;
                }
                f[i] = lo;
            }
            if (wrapped) break;
        }
    }
    return best - 1;
}

}  // namespace chipfire
