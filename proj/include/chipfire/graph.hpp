#pragma once

#include <optional>
#include <tuple>

#include "chipfire/types.hpp"

namespace chipfire {

struct Arc {
    std::size_t tail;
    std::size_t head;
    std::int64_t multiplicity;
};

// arcs[i][j] = number of arcs v_i -> v_j.
struct DirectedMultigraph {
    Matrix arcs;

    std::size_t size() const { return arcs.size(); }
    std::int64_t out_degree(std::size_t v) const;
    std::int64_t in_degree(std::size_t v) const;
};

enum class Side { row, column };

DirectedMultigraph build_digraph(const std::vector<Arc>& arc_list,
                                 std::optional<std::size_t> vertices = std::nullopt);
bool is_strongly_connected(const DirectedMultigraph& g);
Vec period_vector(const DirectedMultigraph& g);
// D - A for either side; the side only records how downstream code fires.
Matrix laplacian(const DirectedMultigraph& g, Side side = Side::row);
DirectedMultigraph reversed(const DirectedMultigraph& g);

// Primitive integer basis of the rational kernel of m (m * x = 0).
std::vector<Vec> integer_kernel(const Matrix& m);

}  // namespace chipfire
