#pragma once

#include "sgf/generate.hpp"
#include "sgf/graph.hpp"

// Worked examples used across the suites: the two-loop rose G2, the dumbbell
// G3, and the loops-on-a-square G5, each with a flow-carrying orientation.
namespace fix {

struct Instance {
    sgf::SignedGraph graph;
    sgf::Orientation eps;
    sgf::IntFlow flow;
};

// Two negative loops a, b at one vertex; f = (1, 1).
inline Instance g2() {
    sgf::GraphSpec s;
    s.vertices = {"u"};
    s.edges = {{"a", "u", "u", -1}, {"b", "u", "u", -1}};
    auto g = sgf::SignedGraph::build(s);
    sgf::Orientation eps(2);
    eps.set_edge(0, 1, 1);
    eps.set_edge(1, -1, -1);
    return {std::move(g), std::move(eps), {1, 1}};
}

// Negative loops a at u and b at v joined by a positive edge p; f = (1, 2, 1)
// ordered (a, b, p).
inline Instance g3() {
    sgf::GraphSpec s;
    s.vertices = {"u", "v"};
    s.edges = {{"a", "u", "u", -1}, {"b", "v", "v", -1}, {"p", "u", "v", 1}};
    auto g = sgf::SignedGraph::build(s);
    sgf::Orientation eps(3);
    eps.set_edge(0, 1, 1);
    eps.set_edge(1, -1, -1);
    eps.set_edge(2, -1, 1);
    return {std::move(g), std::move(eps), {1, 1, 2}};
}

// Negative loops on opposite corners of a balanced square; f = 1 everywhere,
// edges ordered (a, b, e12, e23, e34, e41).
inline Instance g5() {
    sgf::GraphSpec s;
    s.vertices = {"v1", "v2", "v3", "v4"};
    s.edges = {{"a", "v1", "v1", -1},  {"b", "v3", "v3", -1},
               {"e12", "v1", "v2", 1}, {"e23", "v2", "v3", 1},
               {"e34", "v3", "v4", 1}, {"e41", "v4", "v1", 1}};
    auto g = sgf::SignedGraph::build(s);
    sgf::Orientation eps(6);
    eps.set_edge(0, -1, -1);
    eps.set_edge(1, 1, 1);
    eps.set_edge(2, 1, -1);
    eps.set_edge(3, 1, -1);
    eps.set_edge(4, -1, 1);
    eps.set_edge(5, -1, 1);
    return {std::move(g), std::move(eps), {1, 1, 1, 1, 1, 1}};
}

// Balanced triangle with the canonical orientation; unit circulation.
inline Instance triangle() {
    auto g = sgf::make_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 1});
    auto eps = sgf::Orientation::canonical(g);
    return {std::move(g), std::move(eps), {1, 1, 1}};
}

}  // namespace fix
