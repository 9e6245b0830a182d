#include "sgf/io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace sgf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

long long get_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<long long>();
}

std::string get_str(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document", "expected a JSON object");

    InputDocument out;
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        fail("vertices", "expected an array of vertex ids");
    for (size_t i = 0; i < doc["vertices"].size(); ++i)
        out.spec.vertices.push_back(
            get_str(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));

    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail("edges", "expected an array of edge records");
    for (size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& je = doc["edges"][i];
        std::string where = "edges[" + std::to_string(i) + "]";
        if (!je.is_object()) fail(where, "expected an object");
        GraphSpec::Edge e;
        if (!je.contains("id")) fail(where, "missing 'id'");
        e.id = get_str(je["id"], where + ".id");
        if (!je.contains("ends") || !je["ends"].is_array() ||
            je["ends"].size() != 2)
            fail(where, "'ends' must be a two-element array");
        e.end0 = get_str(je["ends"][0], where + ".ends[0]");
        e.end1 = get_str(je["ends"][1], where + ".ends[1]");
        if (!je.contains("sign")) fail(where, "missing 'sign'");
        e.sign = static_cast<int>(get_int(je["sign"], where + ".sign"));
        out.spec.edges.push_back(std::move(e));
    }

    if (doc.contains("orientation")) {
        if (!doc["orientation"].is_object())
            fail("orientation", "expected an object of edge id -> [s0, s1]");
        std::map<std::string, std::array<int, 2>> ori;
        for (const auto& [id, val] : doc["orientation"].items()) {
            std::string where = "orientation['" + id + "']";
            if (!val.is_array() || val.size() != 2)
                fail(where, "expected a two-element array");
            ori[id] = {static_cast<int>(get_int(val[0], where + "[0]")),
                       static_cast<int>(get_int(val[1], where + "[1]"))};
        }
        out.orientation = std::move(ori);
    }
    if (doc.contains("flow")) {
        if (!doc["flow"].is_object())
            fail("flow", "expected an object of edge id -> integer");
        std::map<std::string, long long> flow;
        for (const auto& [id, val] : doc["flow"].items())
            flow[id] = get_int(val, "flow['" + id + "']");
        out.flow = std::move(flow);
    }
    return out;
}

LoadedInput load_input(const InputDocument& doc) {
    SignedGraph graph = SignedGraph::build(doc.spec);
    Orientation eps(graph.edge_count());
    if (doc.orientation) {
        for (const auto& [id, slots] : *doc.orientation) {
            int e = graph.edge_index(id);
            if (e < 0) fail("orientation['" + id + "']", "unknown edge id");
            eps.set_edge(e, slots[0], slots[1]);
        }
        for (int e = 0; e < graph.edge_count(); ++e)
            if (!eps.defined(e))
                fail("orientation", "missing edge '" + graph.edge_id(e) + "'");
        auto errs = orientation_violations(graph, eps);
        if (!errs.empty()) {
            std::string joined = "invalid orientation:";
            for (const auto& m : errs) joined += "\n  " + m;
            throw ParseError(joined);
        }
    } else {
        eps = Orientation::canonical(graph);
    }
    LoadedInput out{std::move(graph), std::move(eps), std::nullopt};
    if (doc.flow) {
        IntFlow f(out.graph.edge_count(), 0);
        for (const auto& [id, val] : *doc.flow) {
            int e = out.graph.edge_index(id);
            if (e < 0) fail("flow['" + id + "']", "unknown edge id");
            f[e] = val;
        }
        out.flow = std::move(f);
    }
    return out;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Json walk_to_json(const SignedGraph& g, const DirectedWalk& w) {
    Json steps = Json::array();
    for (const auto& s : w.steps)
        steps.push_back({{"edge", g.edge_id(s.edge)},
                         {"from_end", s.from_end},
                         {"dir_from", s.dir_from},
                         {"dir_to", s.dir_to}});
    return Json{{"start", g.vertex_id(w.start)},
                {"length", w.length()},
                {"steps", std::move(steps)}};
}

Json tree_to_json(const SignedGraph& g, const CycleTree& t) {
    Json cycles = Json::array();
    for (const auto& c : t.cycles) {
        Json edges = Json::array();
        for (int e : c.edges) edges.push_back(g.edge_id(e));
        Json ivs = Json::array();
        for (int v : c.intersection_vertices) ivs.push_back(g.vertex_id(v));
        cycles.push_back({{"edges", std::move(edges)},
                          {"sign", c.sign},
                          {"intersection_vertices", std::move(ivs)},
                          {"end_block", c.is_end_block()}});
    }
    Json paths = Json::array();
    for (const auto& p : t.paths) {
        Json edges = Json::array();
        for (int e : p.edges) edges.push_back(g.edge_id(e));
        paths.push_back({{"edges", std::move(edges)},
                         {"from", g.vertex_id(p.verts.front())},
                         {"to", g.vertex_id(p.verts.back())}});
    }
    Json ivs = Json::array();
    for (int v : t.intersection_vertices) ivs.push_back(g.vertex_id(v));
    return Json{{"cycles", std::move(cycles)},
                {"paths", std::move(paths)},
                {"intersection_vertices", std::move(ivs)}};
}

Json orientation_to_json(const SignedGraph& g, const Orientation& eps) {
    Json out = Json::object();
    for (int r : g.edges_by_id()) {
        if (!eps.defined(r)) continue;
        out[g.edge_id(r)] = {eps.value(r, 0), eps.value(r, 1)};
    }
    return out;
}

Json flow_to_json(const SignedGraph& g, const IntFlow& f) {
    Json out = Json::object();
    for (int r : g.edges_by_id()) out[g.edge_id(r)] = f[r];
    return out;
}

Json circuit_to_json(const SignedGraph& g, const CycleTree& t,
                     const CircuitClass& c) {
    Json out{{"class", circuit_kind_name(c.kind)}};
    auto cycle_edges = [&](int ci) {
        Json edges = Json::array();
        for (int e : t.cycles[ci].edges) edges.push_back(g.edge_id(e));
        return edges;
    };
    if (c.kind == CircuitClass::TypeI) {
        out["balanced_cycle"] = cycle_edges(c.cycle0);
    } else if (c.kind == CircuitClass::TypeII || c.kind == CircuitClass::TypeIII) {
        out["cycle_1"] = cycle_edges(c.cycle0);
        out["cycle_2"] = cycle_edges(c.cycle1);
        if (c.kind == CircuitClass::TypeIII) {
            Json edges = Json::array();
            for (int e : t.paths[c.path].edges) edges.push_back(g.edge_id(e));
            out["path"] = std::move(edges);
        }
    }
    return out;
}

Json half_decomposition_to_json(const SignedGraph& g,
                                const HalfDecomposition& hd) {
    Json summands = Json::array();
    for (const auto& s : hd.summands) {
        Json edges = Json::array();
        for (int e : s.edges) edges.push_back(g.edge_id(e));
        Json ind = Json::object();
        for (int e : s.edges) ind[g.edge_id(e)] = s.indicator[e];
        summands.push_back({{"edges", std::move(edges)},
                            {"circuit", circuit_to_json(g, s.tree, s.circuit)},
                            {"indicator", std::move(ind)},
                            {"coefficient", {{"numerator", s.doubled_coefficient},
                                             {"denominator", 2}}}});
    }
    Json paths = Json::array();
    for (const auto& p : hd.connecting_paths) paths.push_back(walk_to_json(g, p));
    return Json{{"summand_count", static_cast<int>(hd.summands.size())},
                {"end_block_count", static_cast<int>(hd.end_cycles.size())},
                {"connecting_paths", std::move(paths)},
                {"summands", std::move(summands)}};
}

std::string to_dot(const SignedGraph& g, const std::string& name,
                   const Orientation* eps, const CycleTree* tree) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    os << "  node [shape=circle];\n";
    std::vector<int> block_path_edge(g.edge_count(), 0);
    if (tree) {
        for (size_t ci = 0; ci < tree->cycles.size(); ++ci) {
            os << "  subgraph cluster_cycle_" << ci << " {\n";
            os << "    label=\"cycle " << ci << "\";\n";
            std::vector<int> vs = tree->cycles[ci].verts;
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            for (int v : vs) os << "    \"" << g.vertex_id(v) << "\";\n";
            os << "  }\n";
        }
        for (const auto& p : tree->paths)
            for (int e : p.edges) block_path_edge[e] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  \"" << g.vertex_id(v) << "\";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        os << "  \"" << g.vertex_id(g.edge_end(e, 0)) << "\" -- \""
           << g.vertex_id(g.edge_end(e, 1)) << "\" [label=\"" << g.edge_id(e)
           << "\"";
        if (g.edge_sign(e) < 0) os << ", style=dashed";
        if (block_path_edge[e]) os << ", penwidth=2";
        if (eps && eps->defined(e)) {
            // +1 points away from the vertex: 'inv' at that end.
            os << ", dir=both";
            os << ", arrowtail=" << (eps->value(e, 0) == 1 ? "inv" : "normal");
            os << ", arrowhead=" << (eps->value(e, 1) == 1 ? "inv" : "normal");
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace sgf
