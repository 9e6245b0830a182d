#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgf/graph.hpp"

namespace sgf {

// Exhaustive verification sweep: every connected labeled signed multigraph up
// to the given size, every integer flow in the box, the structural
// indecomposability test against the brute-force verdict, plus full
// decomposition soundness for every flow. Disagreement rows carry
// (graph, flow, verdicts).
struct SweepResult {
    long long graphs = 0;
    long long flow_instances = 0;  // nontrivial flows tested
    long long indecomposable = 0;
    long long decomposable = 0;
    long long disagreements = 0;
    long long decomposition_terms = 0;
    long long decomposition_violations = 0;
    std::vector<std::string> disagreement_rows;  // capped at max_rows
};

SweepResult indecomposability_sweep(int max_vertices, int max_edges, int bound,
                               std::size_t max_rows = 32);

// Compact one-line description of a sweep graph, e.g.
// "v=3 edges=e01:v1-v2:+ e02:v2-v3:-".
std::string describe_graph(const SignedGraph& g);

}  // namespace sgf
