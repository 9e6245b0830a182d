#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgf/graph.hpp"
#include "sgf/walk.hpp"

namespace sgf {

// Block decomposition of a connected signed subgraph into edge-disjoint block
// cycles and vertex-disjoint block paths whose incidence structure is a tree.
// Zero-length attachments (two cycles sharing a vertex) are junctions, not
// degenerate paths. Every intersection vertex is a cut-point of the subgraph.
struct CycleTree {
    std::vector<int> edges;  // sorted edge indices of the subgraph

    struct Cycle {
        // verts[i] -- edges[i] -- verts[(i+1) % L]; a loop is {v}, {e}.
        std::vector<int> verts;
        std::vector<int> edges;
        int sign = 1;
        std::vector<int> intersection_vertices;  // sorted
        bool is_end_block() const { return intersection_vertices.size() == 1; }
    };
    struct Path {
        // verts[i] -- edges[i] -- verts[i+1]; endpoints lie on cycle0/cycle1.
        std::vector<int> verts;
        std::vector<int> edges;
        int cycle0 = -1, cycle1 = -1;
    };
    struct Junction {  // two cycles sharing a single vertex
        int cycle0 = -1, cycle1 = -1;
        int vertex = -1;
    };

    std::vector<Cycle> cycles;  // ordered by smallest edge id
    std::vector<Path> paths;    // ordered by smallest edge id
    std::vector<Junction> junctions;
    std::vector<int> intersection_vertices;  // sorted

    int attachment_count() const {
        return static_cast<int>(paths.size() + junctions.size());
    }
};

struct DetectResult {
    std::optional<CycleTree> tree;
    std::string error;  // violated condition when tree is empty
};

// Recognizes the unique {C_i, P_j} decomposition of the subgraph induced by
// the given edge set, or reports which cycle-tree condition fails.
DetectResult detect_cycle_tree(const SignedGraph& g,
                               const std::vector<int>& edges);

struct ParityReport {
    bool ok = false;
    struct CycleParity {
        int cycle = -1;
        int sign = 1;
        int intersection_count = 0;
        bool ok = false;
    };
    std::vector<CycleParity> cycles;
};

// Parity Condition: balanced cycles carry evenly many intersection vertices,
// unbalanced cycles oddly many.
ParityReport check_parity(const SignedGraph& g, const CycleTree& t);

// Definitional test: eps has neither sink nor source on the subgraph, and the
// restriction to each block cycle has a sink or source at each of its
// cut-points. eps must be a valid orientation covering exactly t's edges.
bool is_direction(const SignedGraph& g, const CycleTree& t,
                  const Orientation& eps);

// Constructs the direction of an Eulerian cycle-tree by peeling end-block
// cycles; returns nullopt when the Parity Condition fails. Deterministic: the
// returned direction has value +1 on slot 0 of the smallest edge.
std::optional<Orientation> find_direction(const SignedGraph& g,
                                          const CycleTree& t);

// 1 on block-cycle edges, 2 on block-path edges, 0 elsewhere.
std::vector<int> indicator(const SignedGraph& g, const CycleTree& t);

// Edgewise coupling(eps, eps_T) * indicator; always a flow of (g, eps).
IntFlow characteristic_flow(const SignedGraph& g, const CycleTree& t,
                            const Orientation& eps_T, const Orientation& eps);

struct CircuitClass {
    enum Kind { TypeI, TypeII, TypeIII, NotCircuit };
    Kind kind = NotCircuit;
    int cycle0 = -1, cycle1 = -1;  // witnesses into t.cycles
    int path = -1;                 // Type III connecting path
};

const char* circuit_kind_name(CircuitClass::Kind k);

// Type I: one balanced cycle. Type II: two unbalanced cycles sharing a vertex.
// Type III: two unbalanced cycles joined by one positive-length path. Anything
// else properly contains an Eulerian cycle-tree. Pre: parity holds.
CircuitClass classify_circuit(const SignedGraph& g, const CycleTree& t);

// Closed walk using each block-cycle edge once and each block-path edge twice,
// crossing blocks at every cut-point; minimum length among closed walks that
// use all edges of t, and a minimal Eulerian walk. Pre: eps_T is a direction.
DirectedWalk canonical_closed_walk(const SignedGraph& g, const CycleTree& t,
                                   const Orientation& eps_T);

// Division W = C_0 P_1 C_1 ... P_k C_k P_{k+1} of a canonical walk of a
// non-circuit Eulerian cycle-tree: the C_i are exactly the end-block cycles
// and each C_i P_{i+1} C_{i+1} is a Type III circuit (indices mod k+1), with
// I_T = 1/2 * sum of the summand indicators, exactly. Coefficients are exact
// halves kept as integers scaled by 2.
struct HalfDecomposition {
    std::vector<int> end_cycles;                 // C_0..C_k as cycle indices
    std::vector<DirectedWalk> connecting_paths;  // P_1..P_{k+1}

    struct Summand {
        std::vector<int> edges;  // sorted circuit edge set
        CycleTree tree;
        CircuitClass circuit;
        std::vector<int> indicator;
        int doubled_coefficient = 1;  // numerator of 1/2, scaled by 2
    };
    std::vector<Summand> summands;
};

// Throws std::invalid_argument when t is a circuit or w is not a canonical
// closed walk of t.
HalfDecomposition half_integer_decomposition(const SignedGraph& g,
                                             const CycleTree& t,
                                             const DirectedWalk& w);

}  // namespace sgf
