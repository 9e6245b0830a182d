#include "sgf/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace sgf {

std::vector<std::string> validate_graph(const GraphSpec& spec) {
    std::vector<std::string> errs;
    std::set<std::string> vseen, eseen;
    for (const auto& v : spec.vertices) {
        if (!vseen.insert(v).second)
            errs.push_back("duplicate vertex id '" + v + "'");
    }
    for (const auto& e : spec.edges) {
        if (!eseen.insert(e.id).second)
            errs.push_back("duplicate edge id '" + e.id + "'");
        if (!vseen.count(e.end0))
            errs.push_back("edge '" + e.id + "': dangling end '" + e.end0 + "'");
        if (!vseen.count(e.end1))
            errs.push_back("edge '" + e.id + "': dangling end '" + e.end1 + "'");
        if (e.sign != 1 && e.sign != -1)
            errs.push_back("edge '" + e.id + "': sign must be -1 or 1, got " +
                           std::to_string(e.sign));
    }
    return errs;
}

SignedGraph SignedGraph::build(const GraphSpec& spec) {
    auto errs = validate_graph(spec);
    if (!errs.empty()) {
        std::string joined = "invalid graph:";
        for (const auto& m : errs) joined += "\n  " + m;
        throw ParseError(joined);
    }
    SignedGraph g;
    g.vertex_ids_ = spec.vertices;
    for (int i = 0; i < static_cast<int>(g.vertex_ids_.size()); ++i)
        g.vertex_index_[g.vertex_ids_[i]] = i;
    for (const auto& e : spec.edges) {
        Edge edge;
        edge.id = e.id;
        edge.ends = {g.vertex_index_.at(e.end0), g.vertex_index_.at(e.end1)};
        edge.sign = e.sign;
        g.edge_index_[e.id] = static_cast<int>(g.edges_.size());
        g.edges_.push_back(std::move(edge));
    }
    g.slots_at_.assign(g.vertex_count(), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        g.slots_at_[g.edge_end(e, 0)].push_back({e, 0});
        g.slots_at_[g.edge_end(e, 1)].push_back({e, 1});
    }
    g.edges_by_id_.resize(g.edge_count());
    std::iota(g.edges_by_id_.begin(), g.edges_by_id_.end(), 0);
    std::sort(g.edges_by_id_.begin(), g.edges_by_id_.end(),
              [&](int a, int b) { return g.edges_[a].id < g.edges_[b].id; });
    g.edge_rank_.resize(g.edge_count());
    for (int r = 0; r < g.edge_count(); ++r) g.edge_rank_[g.edges_by_id_[r]] = r;
    return g;
}

int SignedGraph::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    return it == vertex_index_.end() ? -1 : it->second;
}

int SignedGraph::edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    return it == edge_index_.end() ? -1 : it->second;
}

Orientation Orientation::canonical(const SignedGraph& g) {
    Orientation eps(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        eps.set_edge(e, 1, -g.edge_sign(e));
    return eps;
}

Orientation Orientation::negated() const {
    Orientation out = *this;
    for (auto& v : out.val_) {
        v[0] = static_cast<int8_t>(-v[0]);
        v[1] = static_cast<int8_t>(-v[1]);
    }
    return out;
}

std::vector<std::string> orientation_violations(const SignedGraph& g,
                                                const Orientation& eps) {
    std::vector<std::string> errs;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!eps.defined(e)) continue;
        int v0 = eps.value(e, 0), v1 = eps.value(e, 1);
        if (std::abs(v0) != 1 || std::abs(v1) != 1 || v0 * v1 != -g.edge_sign(e))
            errs.push_back("edge '" + g.edge_id(e) + "': slot product " +
                           std::to_string(v0 * v1) + " violates -sign = " +
                           std::to_string(-g.edge_sign(e)));
    }
    return errs;
}

int coupling(const Orientation& eps1, const Orientation& eps2, int e) {
    if (!eps1.defined(e) || !eps2.defined(e)) return 0;
    return eps1.value(e, 0) * eps2.value(e, 0);
}

VertexCharge boundary(const SignedGraph& g, const IntFlow& f,
                      const Orientation& eps) {
    VertexCharge charge(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        charge[g.edge_end(e, 0)] += eps.value(e, 0) * f[e];
        charge[g.edge_end(e, 1)] += eps.value(e, 1) * f[e];
    }
    return charge;
}

bool is_flow(const SignedGraph& g, const IntFlow& f, const Orientation& eps) {
    auto charge = boundary(g, f, eps);
    return std::all_of(charge.begin(), charge.end(),
                       [](long long c) { return c == 0; });
}

std::vector<int> support(const IntFlow& f) {
    std::vector<int> supp;
    for (int e = 0; e < static_cast<int>(f.size()); ++e)
        if (f[e] != 0) supp.push_back(e);
    return supp;
}

bool is_trivial(const IntFlow& f) {
    return std::all_of(f.begin(), f.end(), [](long long v) { return v == 0; });
}

Orientation derived_orientation(const SignedGraph& g, const IntFlow& f,
                                const Orientation& eps) {
    Orientation out = eps;
    for (int e = 0; e < g.edge_count(); ++e)
        if (f[e] < 0 && eps.defined(e))
            out.set_edge(e, -eps.value(e, 0), -eps.value(e, 1));
    return out;
}

int sign_of_edge_set(const SignedGraph& g, const std::vector<int>& edges) {
    int s = 1;
    for (int e : edges) s *= g.edge_sign(e);
    return s;
}

IntFlow abs_flow(const IntFlow& f) {
    IntFlow out = f;
    for (auto& v : out) v = std::llabs(v);
    return out;
}

bool edge_set_connected(const SignedGraph& g, const std::vector<int>& edges) {
    if (edges.empty()) return false;
    std::vector<char> in_set(g.edge_count(), 0), touched(g.vertex_count(), 0);
    for (int e : edges) {
        in_set[e] = 1;
        touched[g.edge_end(e, 0)] = touched[g.edge_end(e, 1)] = 1;
    }
    std::vector<int> stack = {g.edge_end(edges[0], 0)};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[stack[0]] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (Slot s : g.slots_at(v)) {
            if (!in_set[s.edge]) continue;
            int w = g.edge_end(s.edge, 1 - s.end);
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (touched[v] && !seen[v]) return false;
    return true;
}

}  // namespace sgf
