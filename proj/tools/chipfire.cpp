#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "chipfire/chipfire.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/io.hpp"

using namespace chipfire;
using Json = nlohmann::ordered_json;

namespace {

struct PropertyFailure : std::runtime_error {
    explicit PropertyFailure(Json doc) : std::runtime_error("property check failed"), doc(std::move(doc)) {}
    Json doc;
};

Json to_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(row);
    return a;
}

Json to_json(const ExtremeClassSet& ext) {
    Json classes = Json::array();
    for (const auto& c : ext.classes)
        classes.push_back({{"rep", c.rep}, {"degree", c.degree}, {"all_reps", c.all_reps}});
    return {{"classes", classes}, {"g_min", ext.g_min}, {"g_max", ext.g_max}};
}

Json graph_file(const ArithmeticalGraph& ag) {
    Json edges = Json::array();
    for (std::size_t i = 0; i < ag.size(); ++i)
        for (std::size_t j = i + 1; j < ag.size(); ++j)
            if (ag.adjacency[i][j] > 0) edges.push_back({i, j, ag.adjacency[i][j]});
    return {{"type", "arithmetical"}, {"vertices", ag.size()}, {"edges", edges}, {"multiplicities", ag.multiplicities}};
}

Json graph_file(const DirectedMultigraph& g) {
    Json arcs = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.arcs[i][j] > 0) arcs.push_back({i, j, g.arcs[i][j]});
    return {{"type", "digraph"}, {"vertices", g.size()}, {"arcs", arcs}};
}

struct Options {
    std::string graph;
    std::string divisor;
    std::size_t base = 0;
    std::string game;
    bool trace = false;
    bool json = true;
    std::optional<std::int64_t> formula_box;
    std::optional<double> budget;
    std::int64_t box = 4;
    std::optional<std::int64_t> headroom;
    std::string action;
    std::int64_t r0 = 0, r1 = 0;
};

double budget_of(const Options& o) {
    if (o.budget) return *o.budget;
    if (const char* env = std::getenv("CHIPFIRE_BUDGET")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("CHIPFIRE_BUDGET is not a number");
        }
    }
    return kDefaultBudget;
}

struct Loaded {
    GraphInput input;
    Game game;
    std::string kind;
};

Loaded load(const Options& o) {
    auto input = load_graph(o.graph);
    if (auto* dg = std::get_if<DirectedMultigraph>(&input)) {
        std::string kind = o.game.empty() ? "row" : o.game;
        if (kind != "row" && kind != "column") throw std::invalid_argument("digraphs support --game row|column");
        return {input, game_for(*dg, kind == "row" ? Side::row : Side::column), kind};
    }
    const auto& ag = std::get<ArithmeticalGraph>(input);
    std::string kind = o.game.empty() ? "chip" : o.game;
    if (kind == "chip") return {input, chip_game(ag), kind};
    if (kind == "row") return {input, row_game(associated_digraph(ag)), kind};
    if (kind == "column") return {input, column_game(associated_digraph(ag)), kind};
    throw std::invalid_argument("unknown game '" + kind + "'");
}

Divisor divisor_for(const Options& o, const Game& game) {
    if (o.divisor.empty()) throw std::invalid_argument("--divisor is required");
    auto d = parse_divisor(o.divisor);
    if (d.size() != game.size())
        throw DimensionError("divisor has " + std::to_string(d.size()) + " entries, graph has " +
                             std::to_string(game.size()) + " vertices");
    return d;
}

void check_base(const Options& o, const Game& game) {
    if (o.base >= game.size()) throw std::invalid_argument("--base out of range");
}

Json cmd_info(const Options& o) {
    auto input = load_graph(o.graph);
    Json out;
    if (auto* dg = std::get_if<DirectedMultigraph>(&input)) {
        bool sc = is_strongly_connected(*dg);
        out["type"] = "digraph";
        out["vertices"] = dg->size();
        out["strongly_connected"] = sc;
        out["period_vector"] = sc ? Json(period_vector(*dg)) : Json(nullptr);
        Vec outdeg;
        for (std::size_t v = 0; v < dg->size(); ++v) outdeg.push_back(dg->out_degree(v));
        out["out_degrees"] = outdeg;
        out["laplacian"] = to_json(laplacian(*dg));
    } else {
        const auto& ag = std::get<ArithmeticalGraph>(input);
        auto digraph = associated_digraph(ag);
        out["type"] = "arithmetical";
        out["vertices"] = ag.size();
        out["strongly_connected"] = true;
        out["multiplicities"] = ag.multiplicities;
        out["deltas"] = ag.deltas;
        out["g0"] = g0(ag);
        out["period_vector"] = period_vector(digraph);
        Vec outdeg;
        for (std::size_t v = 0; v < digraph.size(); ++v) outdeg.push_back(digraph.out_degree(v));
        out["out_degrees"] = outdeg;
        out["laplacian"] = to_json(chip_game(ag).M);
    }
    return out;
}

Json trace_json(const DharTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) steps.push_back({{"strategy", s.strategy}, {"vertex", s.vertex}});
    return steps;
}

Json cmd_reduce(const Options& o) {
    auto l = load(o);
    check_base(o, l.game);
    auto D = divisor_for(o, l.game);
    auto [red, f] = reduce(l.game, o.base, D);
    Json out{{"game", l.kind}, {"base", o.base}, {"divisor", D}, {"reduced", red}, {"strategy", f},
             {"representatives", all_reduced_representatives(l.game, o.base, D)}};
    if (l.kind == "column")
        if (auto* dg = std::get_if<DirectedMultigraph>(&l.input)) {
            out["gparking"] = is_gparking(*dg, o.base, red);
            out["via_transform"] = column_reduce_via_transform(*dg, o.base, D).first;
        }
    if (o.trace) out["trace"] = trace_json(dhar(l.game, o.base, red, true));
    return out;
}

Json cmd_dhar(const Options& o) {
    auto l = load(o);
    check_base(o, l.game);
    auto D = divisor_for(o, l.game);
    auto t = dhar(l.game, o.base, D, o.trace);
    Json out{{"game", l.kind},         {"base", o.base},       {"divisor", D},
             {"reduced", is_zero(t.terminal)}, {"terminal", t.terminal}, {"length", t.length},
             {"witnesses", t.reduced_witnesses}};
    if (o.trace) out["trace"] = trace_json(t);
    return out;
}

Json cmd_rank(const Options& o) {
    auto l = load(o);
    check_base(o, l.game);
    auto D = divisor_for(o, l.game);
    return {{"rank", rank(l.game, o.base, D)}};
}

Json cmd_extremes(const Options& o) {
    auto l = load(o);
    check_base(o, l.game);
    auto ext = enumerate_extremes(l.game, o.base, budget_of(o));
    Json out = to_json(ext);
    out["uniform"] = ext.g_min == ext.g_max;
    return out;
}

Json cmd_rr(const Options& o) {
    auto l = load(o);
    check_base(o, l.game);
    auto rep = rr_verdict(l.game, o.base, budget_of(o));
    Json out;
    out["game"] = l.kind;
    out["uniform"] = rep.uniform;
    out["reflection_invariant"] = rep.reflection_invariant;
    out["rr"] = rep.rr_property;
    out["g"] = rep.g ? Json(*rep.g) : Json(nullptr);
    out["g_min"] = rep.extremes.g_min;
    out["g_max"] = rep.extremes.g_max;
    out["canonical"] = rep.canonical ? Json(*rep.canonical) : Json(nullptr);
    out["reflection_canonical"] = rep.reflection_canonical ? Json(*rep.reflection_canonical) : Json(nullptr);
    out["natural_rr"] = rep.natural_rr;
    out["witness"] = rep.witness ? to_json(*rep.witness) : Json(nullptr);
    Json crit = Json::array();
    for (const auto& p : rep.crit) crit.push_back(to_json(p));
    out["crit_points"] = crit;
    out["extremes"] = to_json(rep.extremes);
    if (auto* ag = std::get_if<ArithmeticalGraph>(&l.input)) out["g0"] = g0(*ag);
    if (o.formula_box) {
        bool ok = true;
        if (rep.rr_property) {
            ok = rr_formula_check(l.game, o.base, rep, *o.formula_box);
            out["formula_check"] = ok;
        } else if (rep.reflection_invariant) {
            ok = canonical_inequality_check(l.game, o.base, rep, *o.formula_box);
            out["inequality_check"] = ok;
        }
        if (!ok) throw PropertyFailure(out);
    }
    return out;
}

Json cmd_sandpile(const Options& o) {
    auto l = load(o);
    check_base(o, l.game);
    if (o.action == "stabilize") {
        auto [s, f] = stabilize(l.game, o.base, divisor_for(o, l.game));
        return {{"stable", s}, {"firings", f}};
    }
    if (o.action == "recurrent") {
        auto D = divisor_for(o, l.game);
        Json out{{"recurrent", is_recurrent(l.game, o.base, D)}};
        if (o.headroom) out["oracle"] = is_recurrent_oracle(l.game, o.base, D, *o.headroom);
        return out;
    }
    if (o.action == "minimal") return {{"minimal_recurrents", minimal_recurrents(l.game, o.base, budget_of(o))}};
    if (o.action == "natural") {
        bool via = natural_rr_via_sandpile(l.game, o.base, budget_of(o));
        bool direct = rr_verdict(l.game, o.base, budget_of(o)).natural_rr;
        Json out{{"natural_rr", via}, {"rr_verdict_natural_rr", direct}};
        if (via != direct) throw PropertyFailure(out);
        return out;
    }
    throw std::invalid_argument("unknown sandpile action '" + o.action + "'");
}

Json cmd_arith(const Options& o) {
    if (o.action == "star") {
        if (o.r0 <= o.r1 || o.r1 < 1) throw std::invalid_argument("star needs --r0 > --r1 >= 1");
        return graph_file(euclidean_star(o.r0, o.r1));
    }
    if (o.graph.empty()) throw std::invalid_argument("graph file required");
    auto input = load_graph(o.graph);
    auto* ag = std::get_if<ArithmeticalGraph>(&input);
    if (!ag) throw std::invalid_argument("arith commands need an arithmetical graph");
    if (o.action == "validate") return {{"valid", true}, {"multiplicities", ag->multiplicities}, {"deltas", ag->deltas}};
    if (o.action == "g0") return {{"g0", g0(*ag)}};
    if (o.action == "digraph") return graph_file(associated_digraph(*ag));
    if (o.action == "check") {
        auto rep = gmax_bound_check(*ag, budget_of(o));
        bool column = column_rr_always(*ag, budget_of(o));
        Json out{{"g_max", rep.g_max},         {"g0", rep.g0},
                 {"gmax_le_g0", rep.bound_holds}, {"pairing_checked", rep.pairing_checked},
                 {"pairing_holds", rep.pairing_holds}, {"column_rr", column}};
        if (!rep.ok() || !column) throw PropertyFailure(out);
        return out;
    }
    throw std::invalid_argument("unknown arith action '" + o.action + "'");
}

Json cmd_oracle(const Options& o) {
    auto l = load(o);
    check_base(o, l.game);
    auto D = divisor_for(o, l.game);
    if (o.action == "rank") return {{"rank", oracle::rank_bruteforce(l.game, o.base, D, o.box)}, {"box", o.box}};
    if (o.action == "effective")
        return {{"effective", oracle::effective_bruteforce(l.game, o.base, D, o.box)}, {"box", o.box}};
    if (o.action == "reduced") return {{"reduced", oracle::reduced_bruteforce(l.game, o.base, D)}};
    throw std::invalid_argument("unknown oracle action '" + o.action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chip-firing Riemann-Roch toolkit"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool with_divisor) {
        sub->add_option("graph", o.graph, "graph JSON file")->required();
        sub->add_option("--base", o.base, "base vertex");
        sub->add_option("--game", o.game, "row | column (digraph); chip | row | column (arithmetical)");
        sub->add_option("--budget", o.budget, "candidate budget for exhaustive scans");
        sub->add_flag("--json", o.json, "emit JSON (always on)");
        if (with_divisor) sub->add_option("--divisor", o.divisor, "comma-separated chip counts");
    };

    auto* info = app.add_subcommand("info", "graph summary");
    info->add_option("graph", o.graph, "graph JSON file")->required();
    info->add_flag("--json", o.json, "emit JSON (always on)");

    auto* red = app.add_subcommand("reduce", "v0-reduced representative");
    common(red, true);
    red->add_flag("--trace", o.trace, "include the Dhar trace");

    auto* dh = app.add_subcommand("dhar", "generalized Dhar algorithm");
    common(dh, true);
    dh->add_flag("--trace", o.trace, "include every step");

    auto* rk = app.add_subcommand("rank", "rank of a divisor");
    common(rk, true);

    auto* ex = app.add_subcommand("extremes", "extreme divisor classes");
    common(ex, false);

    auto* rr = app.add_subcommand("rr-check", "Riemann-Roch verdict");
    common(rr, false);
    rr->add_option("--formula-box", o.formula_box, "verify the formula on [-B, B]^n");

    auto* sp = app.add_subcommand("sandpile", "sandpile dynamics");
    sp->add_option("action", o.action, "stabilize | recurrent | minimal | natural")->required();
    common(sp, true);
    sp->add_option("--headroom", o.headroom, "also run the bounded reachability oracle");

    auto* ar = app.add_subcommand("arith", "arithmetical graph tools");
    ar->add_option("action", o.action, "validate | g0 | digraph | star | check")->required();
    ar->add_option("graph", o.graph, "arithmetical graph JSON file");
    ar->add_option("--r0", o.r0, "star center multiplicity");
    ar->add_option("--r1", o.r1, "first chain multiplicity");
    ar->add_option("--budget", o.budget, "candidate budget");
    ar->add_flag("--json", o.json, "emit JSON (always on)");

    auto* orc = app.add_subcommand("oracle", "brute-force reference checks");
    orc->add_option("action", o.action, "rank | effective | reduced")->required();
    common(orc, true);
    orc->add_option("--box", o.box, "strategy search radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Json out;
        if (*info) out = cmd_info(o);
        else if (*red) out = cmd_reduce(o);
        else if (*dh) out = cmd_dhar(o);
        else if (*rk) out = cmd_rank(o);
        else if (*ex) out = cmd_extremes(o);
        else if (*rr) out = cmd_rr(o);
        else if (*sp) out = cmd_sandpile(o);
        else if (*ar) out = cmd_arith(o);
        else if (*orc) out = cmd_oracle(o);
        std::cout << out.dump() << "\n";
        return 0;
    } catch (const PropertyFailure& e) {
        std::cout << e.doc.dump() << "\n";
        std::cerr << "property check failed\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
