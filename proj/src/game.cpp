#include "chipfire/game.hpp"

#include "chipfire/errors.hpp"

namespace chipfire {

Game make_game(Matrix M, Vec period, Vec weight, std::string kind) {
    std::size_t n = M.size();
    if (n < 2) throw InvalidGraph("game needs at least two vertices");
    if (period.size() != n || weight.size() != n) throw DimensionError("period/weight dimension mismatch");
    for (const auto& row : M)
        if (row.size() != n) throw DimensionError("firing matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (period[i] <= 0 || weight[i] <= 0) throw InvalidGraph("period and weight must be positive");
        if (M[i][i] <= 0) throw InvalidGraph("vertex " + std::to_string(i) + " never loses chips");
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s = checked_add(s, checked_mul(M[i][j], period[j]));
        if (s != 0) throw InvalidGraph("period vector is not in the kernel of the firing matrix");
    }
    std::vector<Vec> gens(n, Vec(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            gens[j][i] = M[i][j];
            s = checked_add(s, checked_mul(weight[i], M[i][j]));
        }
        if (s != 0) throw InvalidGraph("firing does not conserve weighted degree");
    }
    Game g;
    g.lattice = LatticeHandle(std::move(gens), n);
    if (g.lattice.rank() != n - 1) throw NotStronglyConnected("lattice rank is not n");
    g.M = std::move(M);
    g.period = std::move(period);
    g.weight = std::move(weight);
    g.kind = std::move(kind);
    return g;
}

Game row_game(const DirectedMultigraph& g) {
    Vec r = period_vector(g);
    Matrix q = laplacian(g);
    std::size_t n = g.size();
    Matrix m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = q[j][i];
    return make_game(std::move(m), std::move(r), Vec(n, 1), "row");
}

Game column_game(const DirectedMultigraph& g) {
    Vec r = period_vector(g);
    std::size_t n = g.size();
    return make_game(laplacian(g, Side::column), Vec(n, 1), std::move(r), "column");
}

Game game_for(const DirectedMultigraph& g, Side side) {
    return side == Side::row ? row_game(g) : column_game(g);
}

Game scale_game(const Game& game) {
    std::size_t n = game.size();
    Matrix m = game.M;
    for (std::size_t i = 0; i < n; ++i)
        for (auto& x : m[i]) x = checked_mul(x, game.weight[i]);
    return make_game(std::move(m), game.period, Vec(n, 1), game.kind + "-scaled");
}

}  // namespace chipfire
