#include "chipfire/fixtures.hpp"

namespace chipfire::fixtures {

DirectedMultigraph t3() { return build_digraph({{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}); }

DirectedMultigraph b2() { return build_digraph({{0, 1, 1}, {1, 0, 2}}); }

DirectedMultigraph p3() { return build_digraph({{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}}); }

DirectedMultigraph k4u() {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) arcs.push_back({i, j, 1});
    return build_digraph(arcs);
}

ArithmeticalGraph ex_a() {
    return validate_arithmetical(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 0, 1}, {0, 3, 2}},
                                 {1, 2, 1, 2, 1, 2});
}

ArithmeticalGraph ex_b() {
    return validate_arithmetical(
        6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {4, 5, 1}, {5, 3, 1}},
        {2, 4, 3, 3, 3, 3});
}

ArithmeticalGraph ex_c() { return validate_arithmetical(3, {{0, 1, 2}, {0, 2, 3}, {1, 2, 6}}, {1, 2, 3}); }

ArithmeticalGraph even_cycle(std::size_t n) {
    std::size_t size = 2 * n;
    std::vector<Edge> edges;
    Vec R(size);
    for (std::size_t i = 0; i < size; ++i) {
        edges.push_back({i, (i + 1) % size, 1});
        R[i] = i % 2 == 0 ? 1 : 2;
    }
    return validate_arithmetical(size, edges, R);
}

ArithmeticalGraph index_cycle(std::size_t n) {
    std::vector<Edge> edges;
    Vec R(n);
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1});
        R[i] = static_cast<std::int64_t>(i) + 1;
    }
    return validate_arithmetical(n, edges, R);
}

ArithmeticalGraph two_vertex(std::int64_t r0, std::int64_t r1) {
    return validate_arithmetical(2, {{0, 1, r0 * r1}}, {r0, r1});
}

ArithmeticalGraph undirected(std::size_t vertices, const std::vector<Edge>& edges) {
    return validate_arithmetical(vertices, edges, Vec(vertices, 1));
}

}  // namespace chipfire::fixtures
