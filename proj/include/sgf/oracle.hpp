#pragma once

#include <vector>

#include "sgf/cycletree.hpp"
#include "sgf/graph.hpp"
#include "sgf/walk.hpp"

namespace sgf {

// Exhaustive ground truth for small instances. Every routine here decides by
// direct search, independent of the structural algorithms it cross-checks.
// Size guards throw GuardError rather than truncating silently.

struct FlowBox {
    int bound = 0;
    std::vector<IntFlow> flows;  // every integer flow with |f(e)| <= bound
};

// All integer flows within the box, found by product enumeration with
// saturated-vertex pruning. Guard: at most 10 edges.
FlowBox enumerate_flows(const SignedGraph& g, const Orientation& eps, int bound);

// True iff no pair of nontrivial flows f1, f2 with f = f1 + f2 and
// f1(e) f2(e) >= 0 on every edge exists. f1 ranges over the sign cone
// 0..f(e) per edge. Guards: at most 10 edges, |f| <= 6 edgewise.
bool brute_force_indecomposable(const SignedGraph& g, const IntFlow& f,
                                const Orientation& eps);

// True iff no directed Eulerian walk carrying w's direction has its edge
// multiset properly contained in w's, decided by enumerating directed closed
// walks over the sub-multisets with w's slot values pinned. Pre:
// is_eulerian_walk(w). Guard: walk length at most 12.
bool brute_force_minimal_walk(const SignedGraph& g, const DirectedWalk& w);

struct EnumeratedCycleTree {
    std::vector<int> edges;  // sorted
    CycleTree tree;          // passes detection and the Parity Condition
};

// Every connected edge subset inducing an Eulerian cycle-tree, in increasing
// subset-mask order. Guard: at most 10 edges.
std::vector<EnumeratedCycleTree> enumerate_eulerian_cycle_trees(
    const SignedGraph& g);

}  // namespace sgf
