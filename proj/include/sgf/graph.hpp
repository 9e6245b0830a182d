#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgf/errors.hpp"

namespace sgf {

// Edge functions and vertex functions, indexed by dense edge/vertex index.
using IntFlow = std::vector<long long>;
using VertexCharge = std::vector<long long>;

// One half-edge: (edge index, end index). For a loop both slots attach to the
// same vertex but stay distinct objects.
struct Slot {
    int edge = -1;
    int end = 0;

    friend bool operator==(const Slot& a, const Slot& b) {
        return a.edge == b.edge && a.end == b.end;
    }
};

// Raw graph description as it appears in input files, before validation.
struct GraphSpec {
    std::vector<std::string> vertices;
    struct Edge {
        std::string id;
        std::string end0, end1;
        int sign = 1;
    };
    std::vector<Edge> edges;
};

// Returns the list of invariant violations; empty means the description is
// sound and can be built.
std::vector<std::string> validate_graph(const GraphSpec& spec);

// Signed multigraph with loops and parallel edges. Vertex and edge ids are
// opaque strings mapped to dense indices; all iteration follows input order.
// Immutable once built.
class SignedGraph {
public:
    static SignedGraph build(const GraphSpec& spec);  // throws ParseError

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const std::string& edge_id(int e) const { return edges_[e].id; }

    // -1 when the id is unknown.
    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    int edge_end(int e, int end) const { return edges_[e].ends[end]; }
    int edge_sign(int e) const { return edges_[e].sign; }
    bool is_loop(int e) const { return edges_[e].ends[0] == edges_[e].ends[1]; }

    int slot_vertex(Slot s) const { return edge_end(s.edge, s.end); }

    // All slots attached to v, in edge input order; a loop contributes both.
    const std::vector<Slot>& slots_at(int v) const { return slots_at_[v]; }

    // Rank of an edge under lexicographic id order (tie-breaking rules).
    int edge_rank(int e) const { return edge_rank_[e]; }
    const std::vector<int>& edges_by_id() const { return edges_by_id_; }

private:
    struct Edge {
        std::string id;
        std::array<int, 2> ends;
        int sign;
    };
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> edge_index_;
    std::vector<std::vector<Slot>> slots_at_;
    std::vector<int> edge_rank_;
    std::vector<int> edges_by_id_;
};

// Orientation: a ±1 value per slot with slot product -sign(e) on every edge in
// its domain; {0,0} marks an edge outside the domain (partial orientations are
// restrictions to subgraphs). A positive loop gets one +1 and one -1 slot, a
// negative loop two equal slots.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(int num_edges) : val_(num_edges, {0, 0}) {}

    // slot 0 = +1, slot 1 = -sign(e), total on the graph.
    static Orientation canonical(const SignedGraph& g);

    int num_edges() const { return static_cast<int>(val_.size()); }
    bool defined(int e) const { return val_[e][0] != 0; }
    int value(int e, int end) const { return val_[e][end]; }
    int value(Slot s) const { return val_[s.edge][s.end]; }

    void set_edge(int e, int v0, int v1) {
        val_[e] = {static_cast<int8_t>(v0), static_cast<int8_t>(v1)};
    }

    Orientation negated() const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.val_ == b.val_;
    }

private:
    std::vector<std::array<int8_t, 2>> val_;
};

// Violations of the slot-product law; empty means eps is a valid orientation
// on its domain.
std::vector<std::string> orientation_violations(const SignedGraph& g,
                                                const Orientation& eps);

// Coupling [eps1,eps2](e): +1 agree, -1 disagree, 0 when e is outside either
// domain. Agreement at one slot implies agreement at the other.
int coupling(const Orientation& eps1, const Orientation& eps2, int e);

// Boundary operator: charge(v) = sum over slots s at v of eps(s) * f(edge(s)).
// The half-edge sum reproduces the textbook coefficients: non-loop eps*f,
// negative loop 2*eps*f, positive loop 0.
VertexCharge boundary(const SignedGraph& g, const IntFlow& f,
                      const Orientation& eps);

bool is_flow(const SignedGraph& g, const IntFlow& f, const Orientation& eps);

// Edge indices with nonzero value, ascending.
std::vector<int> support(const IntFlow& f);

bool is_trivial(const IntFlow& f);

// eps_f: slot values negated on edges where f < 0. Satisfies
// |f| = [eps,eps_f] . f edgewise.
Orientation derived_orientation(const SignedGraph& g, const IntFlow& f,
                                const Orientation& eps);

// Product of signs over an edge multiset (repeats allowed); empty -> +1.
int sign_of_edge_set(const SignedGraph& g, const std::vector<int>& edges);

IntFlow abs_flow(const IntFlow& f);

// True when every vertex touched by `edges` is reachable from every other one
// through edges of the set. Empty sets are not connected.
bool edge_set_connected(const SignedGraph& g, const std::vector<int>& edges);

}  // namespace sgf
