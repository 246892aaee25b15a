#pragma once

#include "chipfire/arithmetical.hpp"

namespace chipfire::fixtures {

DirectedMultigraph t3();
DirectedMultigraph b2();
DirectedMultigraph p3();
DirectedMultigraph k4u();

ArithmeticalGraph ex_a();
ArithmeticalGraph ex_b();
ArithmeticalGraph ex_c();
// 2n-cycle with multiplicities 1,2,1,2,...
ArithmeticalGraph even_cycle(std::size_t n);
// n-cycle whose i-th vertex has multiplicity i + 1.
ArithmeticalGraph index_cycle(std::size_t n);
// Two vertices joined by r0 * r1 edges.
ArithmeticalGraph two_vertex(std::int64_t r0, std::int64_t r1);
ArithmeticalGraph undirected(std::size_t vertices, const std::vector<Edge>& edges);

}  // namespace chipfire::fixtures
