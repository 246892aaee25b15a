#pragma once

#include <string>

#include "chipfire/graph.hpp"
#include "chipfire/lattice.hpp"

namespace chipfire {

// A chip-firing game: firing f moves D to D - M f. The period is the
// positive primitive vector with M P = 0 and the weight satisfies W^T M = 0,
// so W-degree is conserved. M[v][v] is the number of chips v loses per fire.
struct Game {
    Matrix M;
    Vec period;
    Vec weight;
    LatticeHandle lattice;
    std::string kind;

    std::size_t size() const { return M.size(); }
    std::int64_t threshold(std::size_t v) const { return M[v][v]; }
};

Game make_game(Matrix M, Vec period, Vec weight, std::string kind);
Game row_game(const DirectedMultigraph& g);
Game column_game(const DirectedMultigraph& g);
Game game_for(const DirectedMultigraph& g, Side side);
// Same firing moves expressed in the currency diag(W): M' = diag(W) M, weight 1.
Game scale_game(const Game& game);

}  // namespace chipfire
