#pragma once

#include <variant>

#include "chipfire/arithmetical.hpp"

namespace chipfire {

using GraphInput = std::variant<DirectedMultigraph, ArithmeticalGraph>;

GraphInput parse_graph_json(const std::string& text);
GraphInput load_graph(const std::string& path);

}  // namespace chipfire
