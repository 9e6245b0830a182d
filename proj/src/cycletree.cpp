#include "sgf/cycletree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sgf {

namespace {

// Biconnected components of the subgraph induced by `edges`. Loops form their
// own blocks; a bridge is a single-edge block. Assumes the subgraph is
// connected (the caller checks).
struct BlockFinder {
    const SignedGraph& g;
    std::vector<std::vector<Slot>> adj;  // non-loop incidences per vertex
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockFinder(const SignedGraph& graph, const std::vector<int>& edges)
        : g(graph), adj(graph.vertex_count()),
          disc(graph.vertex_count(), 0), low(graph.vertex_count(), 0) {
        for (int e : edges) {
            if (g.is_loop(e)) {
                blocks.push_back({e});
            } else {
                adj[g.edge_end(e, 0)].push_back({e, 0});
                adj[g.edge_end(e, 1)].push_back({e, 1});
            }
        }
    }

    void dfs(int u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        for (Slot s : adj[u]) {
            int e = s.edge;
            int w = g.edge_end(e, 1 - s.end);
            if (e == parent_edge) continue;
            if (disc[w] == 0) {
                edge_stack.push_back(e);
                dfs(w, e);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<int> blk;
                    while (true) {
                        int x = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(x);
                        if (x == e) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) {
                edge_stack.push_back(e);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }

    void run(const std::vector<int>& edges) {
        for (int e : edges) {
            int v = g.edge_end(e, 0);
            if (disc[v] == 0) dfs(v, -1);
        }
    }
};

// Orders a cycle block into a closed sequence anchored at its smallest edge.
bool walk_cycle_block(const SignedGraph& g, const std::vector<int>& block,
                      CycleTree::Cycle& out) {
    if (block.size() == 1) {
        int e = block[0];
        if (!g.is_loop(e)) return false;
        out.verts = {g.edge_end(e, 0)};
        out.edges = {e};
        out.sign = g.edge_sign(e);
        return true;
    }
    // A simple cycle block has exactly two incidences per vertex.
    std::map<int, std::vector<int>> at;  // vertex -> incident block edges
    for (int e : block) {
        if (g.is_loop(e)) return false;
        at[g.edge_end(e, 0)].push_back(e);
        at[g.edge_end(e, 1)].push_back(e);
    }
    for (const auto& [v, es] : at)
        if (es.size() != 2) return false;
    int anchor = *std::min_element(block.begin(), block.end(), [&](int a, int b) {
        return g.edge_rank(a) < g.edge_rank(b);
    });
    int v0 = g.edge_end(anchor, 0);
    out.verts = {v0};
    out.edges = {anchor};
    int prev = anchor, cur = g.edge_end(anchor, 1);
    while (cur != v0) {
        out.verts.push_back(cur);
        const auto& es = at[cur];
        int next = es[0] == prev ? es[1] : es[0];
        out.edges.push_back(next);
        prev = next;
        cur = g.edge_end(next, 0) == cur ? g.edge_end(next, 1)
                                         : g.edge_end(next, 0);
    }
    if (out.edges.size() != block.size()) return false;  // block splits
    out.sign = sign_of_edge_set(g, out.edges);
    return true;
}

int cycle_min_rank(const SignedGraph& g, const CycleTree::Cycle& c) {
    int r = g.edge_rank(c.edges[0]);
    for (int e : c.edges) r = std::min(r, g.edge_rank(e));
    return r;
}

int path_min_rank(const SignedGraph& g, const CycleTree::Path& p) {
    int r = g.edge_rank(p.edges[0]);
    for (int e : p.edges) r = std::min(r, g.edge_rank(e));
    return r;
}

// End index of c.edges[i] on the side of c.verts[i]; loops depart via slot 0.
int cycle_dep_end(const SignedGraph& g, const CycleTree::Cycle& c, int i) {
    int e = c.edges[i];
    if (g.is_loop(e)) return 0;
    return g.edge_end(e, 0) == c.verts[i] ? 0 : 1;
}

// The two slots a cycle contributes at one of its vertices.
std::array<Slot, 2> cycle_slots_at(const SignedGraph& g,
                                   const CycleTree::Cycle& c, int v) {
    int L = static_cast<int>(c.edges.size());
    if (L == 1) return {Slot{c.edges[0], 0}, Slot{c.edges[0], 1}};
    for (int i = 0; i < L; ++i) {
        if (c.verts[i] != v) continue;
        int dep = cycle_dep_end(g, c, i);
        int j = (i + L - 1) % L;
        int arr = 1 - cycle_dep_end(g, c, j);
        return {Slot{c.edges[i], dep}, Slot{c.edges[j], arr}};
    }
    throw InvariantError("cycle_slots_at: vertex not on cycle");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

DetectResult detect_cycle_tree(const SignedGraph& g,
                               const std::vector<int>& edges_in) {
    DetectResult res;
    std::vector<int> edges = edges_in;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty()) {
        res.error = "empty edge set";
        return res;
    }
    if (!edge_set_connected(g, edges)) {
        res.error = "induced subgraph is not connected";
        return res;
    }

    BlockFinder bf(g, edges);
    bf.run(edges);

    CycleTree t;
    t.edges = edges;
    std::vector<int> bridges;
    for (const auto& blk : bf.blocks) {
        if (blk.size() == 1 && !g.is_loop(blk[0])) {
            bridges.push_back(blk[0]);
            continue;
        }
        CycleTree::Cycle c;
        if (!walk_cycle_block(g, blk, c)) {
            res.error = "block containing edge '" + g.edge_id(blk[0]) +
                        "' is not a simple cycle (two cycles share an edge)";
            return res;
        }
        t.cycles.push_back(std::move(c));
    }
    std::sort(t.cycles.begin(), t.cycles.end(),
              [&](const CycleTree::Cycle& a, const CycleTree::Cycle& b) {
                  return cycle_min_rank(g, a) < cycle_min_rank(g, b);
              });

    // Vertex -> cycles through it.
    std::map<int, std::vector<int>> cycles_at;
    for (int ci = 0; ci < static_cast<int>(t.cycles.size()); ++ci) {
        std::set<int> vs(t.cycles[ci].verts.begin(), t.cycles[ci].verts.end());
        for (int v : vs) cycles_at[v].push_back(ci);
    }
    for (const auto& [v, cs] : cycles_at) {
        if (cs.size() >= 3) {
            res.error = "three cycles meet at vertex '" + g.vertex_id(v) +
                        "' (cycle incidence structure is not a tree)";
            return res;
        }
        if (cs.size() == 2) t.junctions.push_back({cs[0], cs[1], v});
    }

    if (t.cycles.empty()) {
        res.error = "subgraph contains no cycle";
        return res;
    }

    // Assemble bridges into block paths. Path endpoints must sit on exactly
    // one cycle each; interiors avoid cycles; no two paths share a vertex.
    std::map<int, std::vector<int>> bridge_at;
    for (int e : bridges) {
        bridge_at[g.edge_end(e, 0)].push_back(e);
        bridge_at[g.edge_end(e, 1)].push_back(e);
    }
    auto on_cycle = [&](int v) {
        auto it = cycles_at.find(v);
        return it != cycles_at.end() ? static_cast<int>(it->second.size()) : 0;
    };
    for (const auto& [v, es] : bridge_at) {
        int deg = static_cast<int>(es.size());
        int cyc = on_cycle(v);
        if (cyc == 0 && deg >= 3) {
            res.error = "block paths branch at vertex '" + g.vertex_id(v) + "'";
            return res;
        }
        if (cyc == 0 && deg == 1) {
            res.error = "block path dangles at vertex '" + g.vertex_id(v) +
                        "' (paths must end on cycles)";
            return res;
        }
        if (cyc >= 1 && deg >= 2) {
            res.error = "two block paths meet at vertex '" + g.vertex_id(v) +
                        "' (block paths must be vertex-disjoint)";
            return res;
        }
        if (cyc >= 2 && deg >= 1) {
            res.error = "path endpoint '" + g.vertex_id(v) +
                        "' lies on two cycles";
            return res;
        }
    }
    std::set<int> used;
    for (const auto& [v, es] : bridge_at) {
        if (on_cycle(v) == 0 || used.count(es[0])) continue;
        // Walk the chain from this terminal to the far terminal.
        CycleTree::Path p;
        p.verts.push_back(v);
        int cur = v, prev_e = -1;
        while (true) {
            const auto& here = bridge_at[cur];
            int next = -1;
            for (int e : here)
                if (e != prev_e && !used.count(e)) next = e;
            if (next == -1) break;
            used.insert(next);
            p.edges.push_back(next);
            cur = g.edge_end(next, 0) == cur ? g.edge_end(next, 1)
                                             : g.edge_end(next, 0);
            p.verts.push_back(cur);
            prev_e = next;
            if (on_cycle(cur)) break;
        }
        invariant(on_cycle(p.verts.back()) == 1 && on_cycle(p.verts.front()) == 1,
                  "block path assembly must end on cycles");
        if (g.vertex_id(p.verts.back()) < g.vertex_id(p.verts.front())) {
            std::reverse(p.verts.begin(), p.verts.end());
            std::reverse(p.edges.begin(), p.edges.end());
        }
        p.cycle0 = cycles_at[p.verts.front()][0];
        p.cycle1 = cycles_at[p.verts.back()][0];
        invariant(p.cycle0 != p.cycle1, "bridge path returned to its own cycle");
        t.paths.push_back(std::move(p));
    }
    invariant(used.size() == bridges.size(), "unassembled bridge edges remain");
    std::sort(t.paths.begin(), t.paths.end(),
              [&](const CycleTree::Path& a, const CycleTree::Path& b) {
                  return path_min_rank(g, a) < path_min_rank(g, b);
              });

    // The cycle incidence structure must be a tree.
    int k = static_cast<int>(t.cycles.size());
    if (t.attachment_count() != k - 1) {
        res.error = "cycle incidence structure is not a tree";
        return res;
    }
    UnionFind uf(k);
    int merged = 0;
    for (const auto& j : t.junctions) merged += uf.unite(j.cycle0, j.cycle1);
    for (const auto& p : t.paths) merged += uf.unite(p.cycle0, p.cycle1);
    if (merged != k - 1) {
        res.error = "cycle incidence structure is not a tree";
        return res;
    }

    std::set<int> ivs;
    for (const auto& j : t.junctions) ivs.insert(j.vertex);
    for (const auto& p : t.paths) {
        ivs.insert(p.verts.front());
        ivs.insert(p.verts.back());
    }
    t.intersection_vertices.assign(ivs.begin(), ivs.end());
    for (auto& c : t.cycles) {
        std::set<int> vs(c.verts.begin(), c.verts.end());
        for (int v : t.intersection_vertices)
            if (vs.count(v)) c.intersection_vertices.push_back(v);
    }

    res.tree = std::move(t);
    return res;
}

ParityReport check_parity(const SignedGraph& g, const CycleTree& t) {
    (void)g;
    ParityReport rep;
    rep.ok = true;
    for (int ci = 0; ci < static_cast<int>(t.cycles.size()); ++ci) {
        const auto& c = t.cycles[ci];
        ParityReport::CycleParity cp;
        cp.cycle = ci;
        cp.sign = c.sign;
        cp.intersection_count = static_cast<int>(c.intersection_vertices.size());
        // balanced <=> even, unbalanced <=> odd
        cp.ok = (c.sign == 1) == (cp.intersection_count % 2 == 0);
        rep.ok = rep.ok && cp.ok;
        rep.cycles.push_back(cp);
    }
    return rep;
}

bool is_direction(const SignedGraph& g, const CycleTree& t,
                  const Orientation& eps) {
    for (int e : t.edges) {
        if (!eps.defined(e)) return false;
        if (eps.value(e, 0) * eps.value(e, 1) != -g.edge_sign(e)) return false;
    }
    std::set<int> edge_set(t.edges.begin(), t.edges.end());
    std::set<int> verts;
    for (int e : t.edges) {
        verts.insert(g.edge_end(e, 0));
        verts.insert(g.edge_end(e, 1));
    }
    // Neither sink nor source anywhere on the subgraph.
    for (int v : verts) {
        bool plus = false, minus = false;
        for (Slot s : g.slots_at(v)) {
            if (!edge_set.count(s.edge)) continue;
            (eps.value(s) == 1 ? plus : minus) = true;
        }
        if (!plus || !minus) return false;
    }
    // Each block cycle has a sink or source at each of its cut-points.
    for (const auto& c : t.cycles)
        for (int v : c.intersection_vertices) {
            auto slots = cycle_slots_at(g, c, v);
            if (eps.value(slots[0]) != eps.value(slots[1])) return false;
        }
    return true;
}

std::vector<int> indicator(const SignedGraph& g, const CycleTree& t) {
    std::vector<int> ind(g.edge_count(), 0);
    for (const auto& c : t.cycles)
        for (int e : c.edges) ind[e] = 1;
    for (const auto& p : t.paths)
        for (int e : p.edges) ind[e] = 2;
    return ind;
}

IntFlow characteristic_flow(const SignedGraph& g, const CycleTree& t,
                            const Orientation& eps_T, const Orientation& eps) {
    auto ind = indicator(g, t);
    IntFlow f(g.edge_count(), 0);
    for (int e : t.edges) f[e] = coupling(eps, eps_T, e) * ind[e];
    return f;
}

const char* circuit_kind_name(CircuitClass::Kind k) {
    switch (k) {
        case CircuitClass::TypeI: return "TypeI";
        case CircuitClass::TypeII: return "TypeII";
        case CircuitClass::TypeIII: return "TypeIII";
        default: return "NotCircuit";
    }
}

CircuitClass classify_circuit(const SignedGraph& g, const CycleTree& t) {
    (void)g;
    CircuitClass out;
    if (t.cycles.size() == 1 && t.attachment_count() == 0) {
        out.kind = CircuitClass::TypeI;
        out.cycle0 = 0;
    } else if (t.cycles.size() == 2 && t.junctions.size() == 1) {
        out.kind = CircuitClass::TypeII;
        out.cycle0 = t.junctions[0].cycle0;
        out.cycle1 = t.junctions[0].cycle1;
    } else if (t.cycles.size() == 2 && t.paths.size() == 1) {
        out.kind = CircuitClass::TypeIII;
        out.cycle0 = t.paths[0].cycle0;
        out.cycle1 = t.paths[0].cycle1;
        out.path = 0;
    }
    return out;
}

namespace {

// Working state for the recursive direction construction: peel an end-block
// cycle C0 with its attachment, switch the sign of the neighbour cycle's edge
// z1 at the junction, recurse, then undo the switch by negating z1's slot and
// pin the path and C0 values by alternation.
struct DirectionBuilder {
    const SignedGraph& g;
    const CycleTree& t;
    std::vector<char> flip;          // effective sign = sign * (flip ? -1 : 1)
    std::vector<std::array<int, 2>> slots;  // per edge, 0 = unset
    std::vector<char> cycle_active, path_active, junction_active;

    explicit DirectionBuilder(const SignedGraph& graph, const CycleTree& tree)
        : g(graph), t(tree), flip(graph.edge_count(), 0),
          slots(graph.edge_count(), {0, 0}),
          cycle_active(tree.cycles.size(), 1),
          path_active(tree.paths.size(), 1),
          junction_active(tree.junctions.size(), 1) {}

    int eff_sign(int e) const { return flip[e] ? -g.edge_sign(e) : g.edge_sign(e); }

    // Attachments still active on a cycle: (is_path, index) pairs.
    std::vector<std::pair<bool, int>> active_attachments(int ci) const {
        std::vector<std::pair<bool, int>> out;
        for (int j = 0; j < static_cast<int>(t.junctions.size()); ++j)
            if (junction_active[j] && (t.junctions[j].cycle0 == ci ||
                                       t.junctions[j].cycle1 == ci))
                out.push_back({false, j});
        for (int p = 0; p < static_cast<int>(t.paths.size()); ++p)
            if (path_active[p] &&
                (t.paths[p].cycle0 == ci || t.paths[p].cycle1 == ci))
                out.push_back({true, p});
        return out;
    }

    // Propagates direction values around a cycle from verts[r], departure
    // value d; returns the arrival value back at verts[r].
    int propagate_cycle(const CycleTree::Cycle& c, int r, int d) {
        int L = static_cast<int>(c.edges.size());
        int a = 0;
        for (int i = 0; i < L; ++i) {
            int pos = (r + i) % L;
            int e = c.edges[pos];
            int dep = cycle_dep_end(g, c, pos);
            slots[e][dep] = d;
            a = -eff_sign(e) * d;
            slots[e][1 - dep] = a;
            d = -a;
        }
        return a;
    }

    void build() {
        int active = 0, last = -1;
        for (int ci = 0; ci < static_cast<int>(t.cycles.size()); ++ci)
            if (cycle_active[ci]) ++active, last = ci;
        if (active == 1) {
            const auto& c = t.cycles[last];
            int eff = 1;
            for (int e : c.edges) eff *= eff_sign(e);
            invariant(eff == 1,
                      "direction recursion reached an unbalanced lone cycle");
            int a = propagate_cycle(c, 0, 1);
            invariant(-a == 1, "lone balanced cycle failed to close");
            return;
        }
        // Peel the end-block cycle with the smallest edge, deterministic.
        int c0 = -1, best = g.edge_count();
        for (int ci = 0; ci < static_cast<int>(t.cycles.size()); ++ci) {
            if (!cycle_active[ci]) continue;
            if (active_attachments(ci).size() == 1) {
                int r = cycle_min_rank(g, t.cycles[ci]);
                if (c0 == -1 || r < best) c0 = ci, best = r;
            }
        }
        invariant(c0 >= 0, "active cycle-tree has no end-block");
        auto [is_path, ai] = active_attachments(c0)[0];
        int u0, w0, c1;
        const CycleTree::Path* path = nullptr;
        if (is_path) {
            path = &t.paths[ai];
            if (path->cycle0 == c0) {
                u0 = path->verts.front();
                w0 = path->verts.back();
                c1 = path->cycle1;
            } else {
                u0 = path->verts.back();
                w0 = path->verts.front();
                c1 = path->cycle0;
            }
            path_active[ai] = 0;
        } else {
            const auto& j = t.junctions[ai];
            u0 = w0 = j.vertex;
            c1 = j.cycle0 == c0 ? j.cycle1 : j.cycle0;
            junction_active[ai] = 0;
        }
        cycle_active[c0] = 0;

        auto c1_slots = cycle_slots_at(g, t.cycles[c1], w0);
        Slot z1 = g.edge_rank(c1_slots[0].edge) <= g.edge_rank(c1_slots[1].edge)
                      ? c1_slots[0]
                      : c1_slots[1];
        if (c1_slots[0].edge == c1_slots[1].edge) z1 = {c1_slots[0].edge, 0};

        flip[z1.edge] ^= 1;
        build();
        flip[z1.edge] ^= 1;
        slots[z1.edge][z1.end] = -slots[z1.edge][z1.end];
        int s1 = slots[z1.edge][z1.end];

        int pin;  // required arrival value at u0 around C0
        if (path != nullptr && !path->edges.empty()) {
            // Walk the path from w0 toward u0, pinned by alternation at w0.
            int m = static_cast<int>(path->edges.size());
            bool from_back = path->verts.back() == w0 && path->cycle1 == c1;
            int d = -s1, a = 0;
            for (int i = 0; i < m; ++i) {
                int idx = from_back ? m - 1 - i : i;
                int near_v = from_back ? path->verts[idx + 1] : path->verts[idx];
                int e = path->edges[idx];
                int near_end = g.edge_end(e, 0) == near_v ? 0 : 1;
                slots[e][near_end] = d;
                a = -eff_sign(e) * d;
                slots[e][1 - near_end] = a;
                d = -a;
            }
            pin = -a;
        } else {
            pin = -s1;
        }
        const auto& c = t.cycles[c0];
        int r = 0;
        while (c.verts[r] != u0) ++r;
        int arrived = propagate_cycle(c, r, pin);
        invariant(arrived == pin, "end-block cycle is not unbalanced");
    }
};

}  // namespace

std::optional<Orientation> find_direction(const SignedGraph& g,
                                          const CycleTree& t) {
    if (!check_parity(g, t).ok) return std::nullopt;
    DirectionBuilder builder(g, t);
    builder.build();

    Orientation eps(g.edge_count());
    for (int e : t.edges) eps.set_edge(e, builder.slots[e][0], builder.slots[e][1]);
    int anchor = *std::min_element(t.edges.begin(), t.edges.end(), [&](int a, int b) {
        return g.edge_rank(a) < g.edge_rank(b);
    });
    if (eps.value(anchor, 0) == -1) eps = eps.negated();
    invariant(is_direction(g, t, eps),
              "constructed orientation is not a direction");
    return eps;
}

namespace {

// Depth-first walk over the block structure: traverse a cycle from its entry
// vertex, crossing into the attached block at every other cut-point, walking
// block paths down and back up around the far subtree.
struct WalkBuilder {
    const SignedGraph& g;
    const CycleTree& t;
    const Orientation& eps;
    std::vector<char> cycle_done, path_done, junction_done;
    // vertex -> attachment (is_path, index); at most one per vertex
    std::map<int, std::pair<bool, int>> attachment_at;
    std::vector<WalkStep> steps;

    WalkBuilder(const SignedGraph& graph, const CycleTree& tree,
                const Orientation& eps_T)
        : g(graph), t(tree), eps(eps_T), cycle_done(tree.cycles.size(), 0),
          path_done(tree.paths.size(), 0), junction_done(tree.junctions.size(), 0) {
        for (int j = 0; j < static_cast<int>(t.junctions.size()); ++j)
            attachment_at[t.junctions[j].vertex] = {false, j};
        for (int p = 0; p < static_cast<int>(t.paths.size()); ++p) {
            attachment_at[t.paths[p].verts.front()] = {true, p};
            attachment_at[t.paths[p].verts.back()] = {true, p};
        }
    }

    void emit(int e, int from_end) {
        steps.push_back({e, from_end, eps.value(e, from_end),
                         eps.value(e, 1 - from_end)});
    }

    void emit_path(const CycleTree::Path& p, bool forward) {
        int m = static_cast<int>(p.edges.size());
        for (int i = 0; i < m; ++i) {
            int idx = forward ? i : m - 1 - i;
            int from_v = forward ? p.verts[idx] : p.verts[idx + 1];
            int e = p.edges[idx];
            emit(e, g.edge_end(e, 0) == from_v ? 0 : 1);
        }
    }

    void descend(int v) {
        auto it = attachment_at.find(v);
        if (it == attachment_at.end()) return;
        auto [is_path, ai] = it->second;
        if (is_path) {
            if (path_done[ai]) return;
            path_done[ai] = 1;
            const auto& p = t.paths[ai];
            bool forward = p.verts.front() == v;
            int far = forward ? p.verts.back() : p.verts.front();
            int far_cycle = forward ? p.cycle1 : p.cycle0;
            emit_path(p, forward);
            traverse_cycle(far_cycle, far);
            emit_path(p, !forward);
        } else {
            if (junction_done[ai]) return;
            junction_done[ai] = 1;
            const auto& j = t.junctions[ai];
            int other = cycle_done[j.cycle0] ? j.cycle1 : j.cycle0;
            traverse_cycle(other, v);
        }
    }

    void traverse_cycle(int ci, int entry) {
        invariant(!cycle_done[ci], "cycle traversed twice");
        cycle_done[ci] = 1;
        const auto& c = t.cycles[ci];
        int L = static_cast<int>(c.edges.size());
        int r = 0;
        while (c.verts[r] != entry) ++r;
        for (int i = 0; i < L; ++i) {
            int pos = (r + i) % L;
            emit(c.edges[pos], cycle_dep_end(g, c, pos));
            if (i < L - 1) descend(c.verts[(pos + 1) % L]);
        }
    }
};

}  // namespace

DirectedWalk canonical_closed_walk(const SignedGraph& g, const CycleTree& t,
                                   const Orientation& eps_T) {
    WalkBuilder wb(g, t, eps_T);
    DirectedWalk w;
    if (t.cycles.size() == 1) {
        w.start = t.cycles[0].verts[0];
        wb.traverse_cycle(0, w.start);
    } else {
        int c0 = -1, best = g.edge_count();
        for (int ci = 0; ci < static_cast<int>(t.cycles.size()); ++ci) {
            if (!t.cycles[ci].is_end_block()) continue;
            int r = cycle_min_rank(g, t.cycles[ci]);
            if (c0 == -1 || r < best) c0 = ci, best = r;
        }
        invariant(c0 >= 0, "cycle-tree has no end-block cycle");
        int u0 = t.cycles[c0].intersection_vertices[0];
        w.start = u0;
        wb.traverse_cycle(c0, u0);
        wb.descend(u0);
    }
    w.steps = std::move(wb.steps);
    invariant(std::all_of(wb.cycle_done.begin(), wb.cycle_done.end(),
                          [](char d) { return d; }) &&
                  std::all_of(wb.path_done.begin(), wb.path_done.end(),
                              [](char d) { return d; }),
              "canonical walk missed a block");
    invariant(validate_walk(g, w).empty() && is_closed_walk(g, w),
              "canonical walk is not a directed closed walk");
    invariant(is_midway_back_avoided(g, w),
              "canonical walk is not midway-back avoided");
    invariant(is_eulerian_walk(g, w), "canonical walk is not Eulerian");
    auto ind = indicator(g, t);
    auto mult = edge_multiplicities(w);
    for (int e : t.edges)
        invariant(mult[e] == ind[e],
                  "canonical walk multiplicities differ from the indicator");
    return w;
}

HalfDecomposition half_integer_decomposition(const SignedGraph& g,
                                             const CycleTree& t,
                                             const DirectedWalk& w_in) {
    if (t.attachment_count() < 2)
        throw std::invalid_argument(
            "half-integer decomposition requires a non-circuit Eulerian "
            "cycle-tree (k >= 1)");
    auto ind = indicator(g, t);
    auto mult = edge_multiplicities(w_in);
    for (int e : t.edges)
        if (mult[e] != ind[e])
            throw std::invalid_argument(
                "walk is not a canonical closed walk of the cycle-tree");

    // Map each step to the end-block cycle it belongs to (-1 otherwise).
    std::vector<int> end_block_of_edge(g.edge_count(), -1);
    std::vector<int> end_cycles;
    for (int ci = 0; ci < static_cast<int>(t.cycles.size()); ++ci)
        if (t.cycles[ci].is_end_block()) {
            end_cycles.push_back(ci);
            for (int e : t.cycles[ci].edges) end_block_of_edge[e] = ci;
        }
    int n = w_in.length();
    auto cls = [&](const DirectedWalk& w, int i) {
        return end_block_of_edge[w.steps[i].edge];
    };
    // Rotate so the walk opens with an end-block run.
    int rot = -1;
    for (int i = 0; i < n && rot < 0; ++i)
        if (cls(w_in, i) >= 0 && cls(w_in, (i + n - 1) % n) != cls(w_in, i))
            rot = i;
    invariant(rot >= 0, "walk has no end-block run");
    DirectedWalk w = rotate_walk(g, w_in, rot);

    // Cut the walk into end-block runs C_0..C_k and the stretches between.
    struct Run {
        int cycle, begin, end;  // steps [begin, end)
    };
    std::vector<Run> runs;
    for (int i = 0; i < n; ++i) {
        int c = cls(w, i);
        if (c < 0) continue;
        if (!runs.empty() && runs.back().cycle == c && runs.back().end == i)
            runs.back().end = i + 1;
        else
            runs.push_back({c, i, i + 1});
    }
    invariant(runs.size() == end_cycles.size(),
              "end-block traversals are not contiguous");
    for (const auto& r : runs)
        invariant(r.end - r.begin ==
                      static_cast<int>(t.cycles[r.cycle].edges.size()),
                  "end-block run length mismatch");

    HalfDecomposition out;
    int k1 = static_cast<int>(runs.size());
    for (const auto& r : runs) out.end_cycles.push_back(r.cycle);

    std::vector<int> stretch_count(g.edge_count(), 0);
    auto vertices = walk_vertices(g, w);
    for (int i = 0; i < k1; ++i) {
        int begin = runs[i].end;
        int end = i + 1 < k1 ? runs[i + 1].begin : n;
        invariant(begin < end, "connecting path P_i must have positive length");
        DirectedWalk p;
        p.start = vertices[begin];
        for (int s = begin; s < end; ++s) p.steps.push_back(w.steps[s]);
        // Simple open path: all vertices along the stretch distinct.
        std::set<int> seen;
        for (int v = begin; v <= end; ++v)
            invariant(seen.insert(vertices[v]).second,
                      "connecting path P_i is not a simple path");
        for (const auto& s : p.steps) ++stretch_count[s.edge];
        out.connecting_paths.push_back(std::move(p));
    }
    for (int e : t.edges) {
        int expect = end_block_of_edge[e] >= 0 ? 0 : (ind[e] == 2 ? 2 : 1);
        invariant(stretch_count[e] == expect,
                  "edge multiplicity across connecting paths is wrong");
    }

    // Each C_i P_{i+1} C_{i+1} is a Type III circuit, indices mod k+1.
    std::vector<int> doubled_sum(g.edge_count(), 0);
    for (int i = 0; i < k1; ++i) {
        std::set<int> edge_set(t.cycles[runs[i].cycle].edges.begin(),
                               t.cycles[runs[i].cycle].edges.end());
        for (const auto& s : out.connecting_paths[i].steps) edge_set.insert(s.edge);
        int next = runs[(i + 1) % k1].cycle;
        edge_set.insert(t.cycles[next].edges.begin(), t.cycles[next].edges.end());

        HalfDecomposition::Summand summand;
        summand.edges.assign(edge_set.begin(), edge_set.end());
        auto det = detect_cycle_tree(g, summand.edges);
        invariant(det.tree.has_value(),
                  "summand C_i P_{i+1} C_{i+1} is not a cycle-tree: " + det.error);
        summand.tree = std::move(*det.tree);
        invariant(check_parity(g, summand.tree).ok,
                  "summand C_i P_{i+1} C_{i+1} fails the Parity Condition");
        summand.circuit = classify_circuit(g, summand.tree);
        invariant(summand.circuit.kind == CircuitClass::TypeIII,
                  "summand C_i P_{i+1} C_{i+1} is not a Type III circuit");
        summand.indicator = indicator(g, summand.tree);
        for (int e : summand.edges) doubled_sum[e] += summand.indicator[e];
        out.summands.push_back(std::move(summand));
    }
    // I_T = 1/2 * sum of summand indicators, in exact integers scaled by 2.
    for (int e = 0; e < g.edge_count(); ++e)
        invariant(doubled_sum[e] == 2 * ind[e],
                  "half-integer identity I_T = 1/2 sum I failed");
    return out;
}

bool is_minimal_eulerian(const SignedGraph& g, const DirectedWalk& w) {
    if (!is_eulerian_walk(g, w)) return false;
    auto mult = edge_multiplicities(w);
    std::vector<int> supp;
    for (const auto& [e, m] : mult) supp.push_back(e);
    auto det = detect_cycle_tree(g, supp);
    if (!det.tree) return false;
    if (!check_parity(g, *det.tree).ok) return false;
    auto ind = indicator(g, *det.tree);
    for (const auto& [e, m] : mult)
        if (m != ind[e]) return false;
    return true;
}

bool is_elementary_walk(const SignedGraph& g, const DirectedWalk& w) {
    if (!is_minimal_eulerian(g, w)) return false;
    auto mult = edge_multiplicities(w);
    std::vector<int> supp;
    for (const auto& [e, m] : mult) supp.push_back(e);
    auto det = detect_cycle_tree(g, supp);
    invariant(det.tree.has_value(), "minimal walk lost its cycle-tree");
    return classify_circuit(g, *det.tree).kind != CircuitClass::NotCircuit;
}

}  // namespace sgf
