#pragma once

#include <unordered_map>
#include <vector>

#include "sgf/graph.hpp"

namespace sgf {

// One traversal of an edge. The edge is entered through slot (edge, from_end)
// and left through the opposite slot; for a loop the slot order encodes the
// traversal sense. dir_from/dir_to are the direction values at those slots and
// satisfy dir_from * dir_to = -sign(edge).
struct WalkStep {
    int edge = -1;
    int from_end = 0;
    int dir_from = 0;
    int dir_to = 0;

    int to_end() const { return 1 - from_end; }
    Slot from_slot() const { return {edge, from_end}; }
    Slot to_slot() const { return {edge, 1 - from_end}; }
};

// Directed walk u_0 x_1 u_1 ... x_n u_n with per-step direction values.
// Consecutive direction values alternate: dir_to(i) + dir_from(i+1) = 0.
struct DirectedWalk {
    int start = -1;  // vertex index u_0
    std::vector<WalkStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
};

// u_0 .. u_n as vertex indices.
std::vector<int> walk_vertices(const SignedGraph& g, const DirectedWalk& w);

// Empty result means the walk satisfies every DirectedWalk invariant.
std::vector<std::string> validate_walk(const SignedGraph& g,
                                       const DirectedWalk& w);

// u_n = u_0 and dir_from(step 1) + dir_to(step n) = 0.
bool is_closed_walk(const SignedGraph& g, const DirectedWalk& w);

// Product of edge signs with multiplicity.
int walk_sign(const SignedGraph& g, const DirectedWalk& w);

// Whenever u_a = u_b with 0 <= a < b < n, the walk leaves u_a the same way it
// later arrives at u_b: dir(u_b, x_b) = dir(u_a, x_{a+1}).
bool is_midway_back_avoided(const SignedGraph& g, const DirectedWalk& w);

// Some vertex occurs three or more times among u_0..u_{n-1}. Pre: closed.
bool has_triple_vertex(const SignedGraph& g, const DirectedWalk& w);

// Closed, balanced, and both traversals of any repeated edge carry identical
// direction values at both slots.
bool is_eulerian_walk(const SignedGraph& g, const DirectedWalk& w);

// f(x) = sum over traversals of x of the coupling between eps and the walk
// direction at that traversal. Requires a closed walk; the result is always a
// flow of (g, eps).
IntFlow characteristic_vector(const SignedGraph& g, const DirectedWalk& w,
                              const Orientation& eps);

// Reversed step sequence with swapped slot order and direction values.
DirectedWalk reverse_walk(const SignedGraph& g, const DirectedWalk& w);

// Closed walks only: same cyclic sequence started at position k.
DirectedWalk rotate_walk(const SignedGraph& g, const DirectedWalk& w, int k);

// Edge index -> number of traversals.
std::unordered_map<int, int> edge_multiplicities(const DirectedWalk& w);

// Structural minimality test: the walk's support induces an Eulerian
// cycle-tree and the walk uses block-cycle edges once and block-path edges
// twice. Pre: is_eulerian_walk. Implemented in cycletree.cpp.
bool is_minimal_eulerian(const SignedGraph& g, const DirectedWalk& w);

// Minimal and the induced subgraph is a circuit. Pre: is_minimal_eulerian.
bool is_elementary_walk(const SignedGraph& g, const DirectedWalk& w);

}  // namespace sgf
