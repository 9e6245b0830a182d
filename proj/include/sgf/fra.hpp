#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgf/cycletree.hpp"
#include "sgf/graph.hpp"
#include "sgf/walk.hpp"

namespace sgf {

// Step-by-step log of a flow reduction run, one line per event.
struct FraTrace {
    std::vector<std::string> lines;
};

// Flow Reduction Algorithm. Extends a half-open walk on |f| under eps_f,
// always leaving a vertex opposite to how it arrived, and stops with one of
// three cut rules the moment a directed closed sub-walk appears. The result
// is a minimal directed Eulerian walk whose direction values are the eps_f
// slot values, whose double vertices are cut-points of its support, and whose
// multiplicities stay below |f| edgewise.
//
// Tie-breaking, so runs are reproducible: the start edge and every extension
// edge are the candidates with the smallest edge id; loops depart through
// slot 0 when both senses qualify. Walks are emitted as the cut rule's step
// range; the reversed-segment cut is emitted spliced (reversed front segment,
// then the tail), an equivalent directed closed walk.
DirectedWalk fra_run(const SignedGraph& g, const IntFlow& f,
                     const Orientation& eps, FraTrace* trace = nullptr);

// One round of flow reduction: a term of the full decomposition.
struct Decomposition {
    struct Term {
        DirectedWalk walk;      // direction values are the eps_f slot values
        CycleTree tree;         // Sigma(W), an Eulerian cycle-tree
        CircuitClass circuit;
        IntFlow flow;           // [eps,eps_f] * I_T; sign-compatible with f
    };
    std::vector<Term> terms;
};

// Repeated flow reduction until the residual vanishes. Terms sum edgewise to
// f and share its sign on every edge; empty for the trivial flow.
Decomposition decompose_flow(const SignedGraph& g, const IntFlow& f,
                             const Orientation& eps, FraTrace* trace = nullptr);

struct IndecomposabilityResult {
    bool indecomposable = false;
    std::optional<CycleTree> witness;  // the Eulerian cycle-tree when true
    std::string reason;                // which structural test ruled it out
};

// Structural indecomposability test: f is indecomposable iff the subgraph
// induced by supp f is an Eulerian cycle-tree T with |f| = I_T exactly.
// Decided without running the reduction; eps_f restricted to T is then a
// direction of T (checked as an internal invariant).
IndecomposabilityResult is_indecomposable(const SignedGraph& g, const IntFlow& f,
                                          const Orientation& eps);

}  // namespace sgf
