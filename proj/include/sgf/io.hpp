#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "sgf/cycletree.hpp"
#include "sgf/fra.hpp"
#include "sgf/graph.hpp"
#include "sgf/walk.hpp"

namespace sgf {

// Reports use ordered JSON so reruns are byte-identical.
using Json = nlohmann::ordered_json;

// One input document: a graph, an optional total orientation, an optional
// integer flow. Missing flow entries default to zero; when no orientation is
// given the canonical one (slot 0 = +1) applies.
struct InputDocument {
    GraphSpec spec;
    std::optional<std::map<std::string, std::array<int, 2>>> orientation;
    std::optional<std::map<std::string, long long>> flow;
};

// Parses and checks the document shape; throws ParseError with field context.
InputDocument parse_document(const std::string& text);

struct LoadedInput {
    SignedGraph graph;
    Orientation eps;
    std::optional<IntFlow> flow;
};

// Builds the graph, resolves the orientation (rejecting slot-product
// violations) and the flow. Conservation is not checked here; `check` reports
// it, other commands require it.
LoadedInput load_input(const InputDocument& doc);

// FNV-1a over the raw bytes, as a hex string; stable across platforms.
std::string fnv1a_hex(const std::string& bytes);

Json walk_to_json(const SignedGraph& g, const DirectedWalk& w);
Json tree_to_json(const SignedGraph& g, const CycleTree& t);
Json orientation_to_json(const SignedGraph& g, const Orientation& eps);
Json flow_to_json(const SignedGraph& g, const IntFlow& f);
Json circuit_to_json(const SignedGraph& g, const CycleTree& t,
                     const CircuitClass& c);
Json half_decomposition_to_json(const SignedGraph& g,
                                const HalfDecomposition& hd);

// DOT rendering: block cycles as clusters, block paths bold, negative edges
// dashed, one arrowhead per slot (+1 points away from the vertex).
std::string to_dot(const SignedGraph& g, const std::string& name,
                   const Orientation* eps, const CycleTree* tree);

}  // namespace sgf
