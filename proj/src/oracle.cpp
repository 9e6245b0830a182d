#include "sgf/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace sgf {

namespace {

constexpr int kMaxEdges = 10;
constexpr long long kMaxFlowValue = 6;
constexpr int kMaxWalkLength = 12;

// Edge order and per-vertex saturation points for pruned enumeration: once the
// last edge at a vertex is assigned, its charge must already be zero.
struct PruneOrder {
    std::vector<int> last_edge_at;  // vertex -> index in edge order, or -1

    PruneOrder(const SignedGraph& g) : last_edge_at(g.vertex_count(), -1) {
        for (int e = 0; e < g.edge_count(); ++e) {
            last_edge_at[g.edge_end(e, 0)] = e;
            last_edge_at[g.edge_end(e, 1)] = e;
        }
    }
};

}  // namespace

FlowBox enumerate_flows(const SignedGraph& g, const Orientation& eps,
                        int bound) {
    if (g.edge_count() > kMaxEdges)
        throw GuardError("enumerate_flows: graph exceeds the " +
                         std::to_string(kMaxEdges) + "-edge guard");
    if (bound < 0) throw GuardError("enumerate_flows: bound must be >= 0");

    FlowBox box;
    box.bound = bound;
    PruneOrder order(g);
    IntFlow f(g.edge_count(), 0);
    VertexCharge charge(g.vertex_count(), 0);

    std::function<void(int)> assign = [&](int e) {
        if (e == g.edge_count()) {
            box.flows.push_back(f);
            return;
        }
        int v0 = g.edge_end(e, 0), v1 = g.edge_end(e, 1);
        for (long long val = -bound; val <= bound; ++val) {
            f[e] = val;
            charge[v0] += eps.value(e, 0) * val;
            charge[v1] += eps.value(e, 1) * val;
            bool ok = (order.last_edge_at[v0] != e || charge[v0] == 0) &&
                      (order.last_edge_at[v1] != e || charge[v1] == 0);
            if (ok) assign(e + 1);
            charge[v0] -= eps.value(e, 0) * val;
            charge[v1] -= eps.value(e, 1) * val;
        }
        f[e] = 0;
    };
    assign(0);
    return box;
}

bool brute_force_indecomposable(const SignedGraph& g, const IntFlow& f,
                                const Orientation& eps) {
    if (g.edge_count() > kMaxEdges)
        throw GuardError("brute_force_indecomposable: graph exceeds the " +
                         std::to_string(kMaxEdges) + "-edge guard");
    for (long long v : f)
        if (std::llabs(v) > kMaxFlowValue)
            throw GuardError("brute_force_indecomposable: |f| exceeds the " +
                             std::to_string(kMaxFlowValue) + " guard");
    invariant(!is_trivial(f), "brute_force_indecomposable needs nontrivial f");

    // Search the sign cone: f1 with f1(e) between 0 and f(e) inclusive. Both
    // f1 and f - f1 are then sign-compatible automatically, and f - f1 is a
    // flow whenever f1 is.
    PruneOrder order(g);
    IntFlow f1(g.edge_count(), 0);
    VertexCharge charge(g.vertex_count(), 0);
    bool found = false;

    std::function<void(int)> assign = [&](int e) {
        if (found) return;
        if (e == g.edge_count()) {
            if (!is_trivial(f1) && f1 != f) found = true;
            return;
        }
        int v0 = g.edge_end(e, 0), v1 = g.edge_end(e, 1);
        long long lo = std::min<long long>(0, f[e]), hi = std::max<long long>(0, f[e]);
        for (long long val = lo; val <= hi && !found; ++val) {
            f1[e] = val;
            charge[v0] += eps.value(e, 0) * val;
            charge[v1] += eps.value(e, 1) * val;
            bool ok = (order.last_edge_at[v0] != e || charge[v0] == 0) &&
                      (order.last_edge_at[v1] != e || charge[v1] == 0);
            if (ok) assign(e + 1);
            charge[v0] -= eps.value(e, 0) * val;
            charge[v1] -= eps.value(e, 1) * val;
        }
        f1[e] = 0;
    };
    assign(0);
    return !found;
}

bool brute_force_minimal_walk(const SignedGraph& g, const DirectedWalk& w) {
    if (w.length() > kMaxWalkLength)
        throw GuardError("brute_force_minimal_walk: walk exceeds the " +
                         std::to_string(kMaxWalkLength) + "-step guard");
    invariant(is_eulerian_walk(g, w),
              "brute_force_minimal_walk needs an Eulerian walk");

    // Depth-first search for a directed closed Eulerian walk properly
    // contained in w's edge multiset and carrying w's own direction: every
    // step reuses w's slot values (an Eulerian walk is single-valued per
    // slot, and a walk compatible with the negated values is compatible with
    // these after flipping). Containment without the direction would be too
    // strong a test: a sub-walk that reverses against the direction is not
    // contained as a directed walk.
    std::vector<int> budget(g.edge_count(), 0);
    std::vector<std::array<int, 2>> vals(g.edge_count(), {0, 0});
    for (const auto& s : w.steps) {
        ++budget[s.edge];
        vals[s.edge][s.from_end] = s.dir_from;
        vals[s.edge][s.to_end()] = s.dir_to;
    }
    int limit = w.length() - 1;
    bool found = false;

    // sign: running edge-sign product, so balance is checked by definition.
    std::function<void(int, int, int, int, int, int)> dfs =
        [&](int start, int v, int first_dir, int last_to, int len, int sign) {
            if (found) return;
            if (len >= 1 && v == start && first_dir + last_to == 0 &&
                sign == 1) {
                found = true;
                return;
            }
            if (len == limit) return;
            for (Slot s : g.slots_at(v)) {
                if (budget[s.edge] == 0) continue;
                int dir_from = vals[s.edge][s.end];
                if (len > 0 && dir_from != -last_to) continue;
                int dir_to = vals[s.edge][1 - s.end];
                --budget[s.edge];
                dfs(start, g.edge_end(s.edge, 1 - s.end),
                    len == 0 ? dir_from : first_dir, dir_to, len + 1,
                    sign * g.edge_sign(s.edge));
                ++budget[s.edge];
                if (found) return;
            }
        };

    std::vector<char> tried(g.vertex_count(), 0);
    for (const auto& step : w.steps) {
        int v = g.slot_vertex(step.from_slot());
        if (tried[v]) continue;
        tried[v] = 1;
        dfs(v, v, 0, 0, 0, 1);
        if (found) return false;
    }
    return true;
}

std::vector<EnumeratedCycleTree> enumerate_eulerian_cycle_trees(
    const SignedGraph& g) {
    if (g.edge_count() > kMaxEdges)
        throw GuardError("enumerate_eulerian_cycle_trees: graph exceeds the " +
                         std::to_string(kMaxEdges) + "-edge guard");
    std::vector<EnumeratedCycleTree> out;
    int m = g.edge_count();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> edges;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) edges.push_back(e);
        if (!edge_set_connected(g, edges)) continue;
        auto det = detect_cycle_tree(g, edges);
        if (!det.tree || !check_parity(g, *det.tree).ok) continue;
        out.push_back({std::move(edges), std::move(*det.tree)});
    }
    return out;
}

}  // namespace sgf
