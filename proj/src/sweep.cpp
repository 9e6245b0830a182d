#include "sgf/sweep.hpp"

#include <sstream>

#include "sgf/fra.hpp"
#include "sgf/generate.hpp"
#include "sgf/oracle.hpp"
#include "sgf/walk.hpp"

namespace sgf {

std::string describe_graph(const SignedGraph& g) {
    std::ostringstream os;
    os << "v=" << g.vertex_count() << " edges=";
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e) os << ' ';
        os << g.edge_id(e) << ':' << g.vertex_id(g.edge_end(e, 0)) << '-'
           << g.vertex_id(g.edge_end(e, 1)) << ':'
           << (g.edge_sign(e) > 0 ? '+' : '-');
    }
    return os.str();
}

namespace {

std::string describe_flow(const SignedGraph& g, const IntFlow& f) {
    std::ostringstream os;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e) os << ',';
        os << g.edge_id(e) << '=' << f[e];
    }
    return os.str();
}

// Decomposition terms must sum to f, share its sign edgewise, and each walk
// must pass the avoidance, cut-point and minimality checks. An indecomposable
// flow must come back as exactly one term equal to f, and vice versa.
bool decomposition_sound(const SignedGraph& g, const IntFlow& f,
                         const Decomposition& dec, bool indecomposable) {
    if (indecomposable != (dec.terms.size() == 1)) return false;
    if (indecomposable && dec.terms[0].flow != f) return false;
    IntFlow sum(g.edge_count(), 0);
    for (const auto& term : dec.terms) {
        if (is_trivial(term.flow)) return false;
        for (int e = 0; e < g.edge_count(); ++e) {
            sum[e] += term.flow[e];
            if (term.flow[e] * f[e] < 0) return false;
        }
        if (!is_midway_back_avoided(g, term.walk)) return false;
        if (has_triple_vertex(g, term.walk)) return false;
        if (!is_minimal_eulerian(g, term.walk)) return false;
    }
    return sum == f;
}

}  // namespace

SweepResult indecomposability_sweep(int max_vertices, int max_edges, int bound,
                               std::size_t max_rows) {
    SweepResult res;
    for_each_connected_signed_multigraph(
        max_vertices, max_edges, [&](const SignedGraph& g) {
            ++res.graphs;
            Orientation eps = Orientation::canonical(g);
            FlowBox box = enumerate_flows(g, eps, bound);
            for (const IntFlow& f : box.flows) {
                if (is_trivial(f)) continue;
                ++res.flow_instances;
                bool fast = is_indecomposable(g, f, eps).indecomposable;
                bool slow = brute_force_indecomposable(g, f, eps);
                if (fast != slow) {
                    ++res.disagreements;
                    if (res.disagreement_rows.size() < max_rows)
                        res.disagreement_rows.push_back(
                            describe_graph(g) + " flow=" + describe_flow(g, f) +
                            " structural=" + (fast ? "indecomposable" : "decomposable") +
                            " brute_force=" + (slow ? "indecomposable" : "decomposable"));
                }
                (fast ? res.indecomposable : res.decomposable) += 1;

                Decomposition dec = decompose_flow(g, f, eps);
                res.decomposition_terms += static_cast<long long>(dec.terms.size());
                if (!decomposition_sound(g, f, dec, fast))
                    ++res.decomposition_violations;
            }
        });
    return res;
}

}  // namespace sgf
