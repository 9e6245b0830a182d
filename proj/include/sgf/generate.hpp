#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgf/graph.hpp"
#include "sgf/walk.hpp"

namespace sgf {

// Builds a graph from compact end-pair and sign lists. Vertices are named
// v1..vn, edges e01..e0m, so id order matches input order.
SignedGraph make_graph(int num_vertices,
                       const std::vector<std::pair<int, int>>& ends,
                       const std::vector<int>& signs);

// Every connected labeled signed multigraph with 1..max_vertices vertices and
// 1..max_edges edges, loops and parallel edges included, all sign patterns.
// Deterministic order: vertex count, then the nondecreasing end-pair multiset,
// then the sign mask read as a binary counter.
void for_each_connected_signed_multigraph(
    int max_vertices, int max_edges,
    const std::function<void(const SignedGraph&)>& fn);

// Random directed closed walk: alternating extension with propagated direction
// values, emitted once the walk returns to its start with the closure
// condition. nullopt when the cap is hit without closing.
std::optional<DirectedWalk> random_closed_directed_walk(const SignedGraph& g,
                                                        std::mt19937_64& rng,
                                                        int max_len);

// Random closed walk kept midway-back avoided at every extension, with the
// direction single-valued per slot (a direction is a function on vertex-edge
// pairs); arrivals violating the revisit rule are only allowed as the closing
// step.
std::optional<DirectedWalk> random_avoided_closed_walk(const SignedGraph& g,
                                                       std::mt19937_64& rng,
                                                       int max_len);

// Hand-built cycle-tree shapes with up to 8 edges: chains and stars of cycles
// joined by paths and shared vertices, with both parity-satisfying and
// parity-violating sign patterns. The full edge set of each graph is a
// cycle-tree.
std::vector<SignedGraph> cycle_tree_family();

}  // namespace sgf
