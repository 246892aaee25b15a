#include "chipfire/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

using nlohmann::json;

std::size_t as_index(const json& j, std::size_t n, const char* what) {
    if (!j.is_number_integer()) throw InvalidGraph(std::string(what) + " must be an integer");
    auto v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidGraph(std::string(what) + " out of range");
    return static_cast<std::size_t>(v);
}

std::int64_t as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidGraph(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

}  // namespace

GraphInput parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidGraph(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidGraph("graph file must hold a JSON object");
    auto type = doc.value("type", std::string());
    if (!doc.contains("vertices")) throw InvalidGraph("missing \"vertices\"");
    auto nv = as_int(doc["vertices"], "vertices");
    if (nv < 2) throw InvalidGraph("graph needs at least two vertices");
    auto n = static_cast<std::size_t>(nv);

    if (type == "digraph") {
        if (!doc.contains("arcs") || !doc["arcs"].is_array()) throw InvalidGraph("missing \"arcs\" array");
        std::vector<Arc> arcs;
        for (const auto& a : doc["arcs"]) {
            if (!a.is_array() || a.size() != 3) throw InvalidGraph("each arc must be [tail, head, multiplicity]");
            arcs.push_back({as_index(a[0], n, "arc tail"), as_index(a[1], n, "arc head"), as_int(a[2], "multiplicity")});
        }
        return build_digraph(arcs, n);
    }
    if (type == "arithmetical") {
        if (!doc.contains("edges") || !doc["edges"].is_array()) throw InvalidGraph("missing \"edges\" array");
        if (!doc.contains("multiplicities") || !doc["multiplicities"].is_array())
            throw InvalidGraph("missing \"multiplicities\" array");
        std::vector<Edge> edges;
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 3) throw InvalidGraph("each edge must be [i, j, multiplicity]");
            edges.push_back({as_index(e[0], n, "edge endpoint"), as_index(e[1], n, "edge endpoint"),
                             as_int(e[2], "multiplicity")});
        }
        Vec R;
        for (const auto& r : doc["multiplicities"]) R.push_back(as_int(r, "multiplicity"));
        return validate_arithmetical(n, edges, R);
    }
    throw InvalidGraph("unknown graph type '" + type + "'");
}

GraphInput load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidGraph("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph_json(ss.str());
}

}  // namespace chipfire
