#include "sgf/generate.hpp"

#include <algorithm>

namespace sgf {

SignedGraph make_graph(int num_vertices,
                       const std::vector<std::pair<int, int>>& ends,
                       const std::vector<int>& signs) {
    invariant(ends.size() == signs.size(), "make_graph: ends/signs mismatch");
    GraphSpec spec;
    for (int v = 0; v < num_vertices; ++v)
        spec.vertices.push_back("v" + std::to_string(v + 1));
    for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
        GraphSpec::Edge edge;
        edge.id = "e" + std::string(e + 1 < 10 ? "0" : "") + std::to_string(e + 1);
        edge.end0 = spec.vertices[ends[e].first];
        edge.end1 = spec.vertices[ends[e].second];
        edge.sign = signs[e];
        spec.edges.push_back(edge);
    }
    return SignedGraph::build(spec);
}

void for_each_connected_signed_multigraph(
    int max_vertices, int max_edges,
    const std::function<void(const SignedGraph&)>& fn) {
    for (int n = 1; n <= max_vertices; ++n) {
        // Unordered vertex pairs including loops, in lexicographic order.
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs.push_back({i, j});
        int p = static_cast<int>(pairs.size());

        for (int m = 1; m <= max_edges; ++m) {
            // Nondecreasing index sequences of length m over the pairs.
            std::vector<int> pick(m, 0);
            while (true) {
                std::vector<std::pair<int, int>> ends;
                for (int i = 0; i < m; ++i) ends.push_back(pairs[pick[i]]);

                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    std::vector<int> signs;
                    for (int i = 0; i < m; ++i)
                        signs.push_back(mask & (1u << i) ? -1 : 1);
                    SignedGraph g = make_graph(n, ends, signs);
                    // Connected and spanning all n declared vertices.
                    std::vector<int> all(m);
                    for (int e = 0; e < m; ++e) all[e] = e;
                    std::vector<char> touched(n, 0);
                    for (int e = 0; e < m; ++e)
                        touched[g.edge_end(e, 0)] = touched[g.edge_end(e, 1)] = 1;
                    bool spans = std::all_of(touched.begin(), touched.end(),
                                             [](char t) { return t != 0; });
                    if (spans && edge_set_connected(g, all)) fn(g);
                }

                int i = m - 1;
                while (i >= 0 && pick[i] == p - 1) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
            }
        }
    }
}

namespace {

struct Candidate {
    Slot slot;
    int dir_from, dir_to;
    bool closes;
};

std::vector<Candidate> step_candidates(const SignedGraph& g,
                                       const DirectedWalk& w, int v) {
    std::vector<Candidate> out;
    for (Slot s : g.slots_at(v)) {
        Candidate c;
        c.slot = s;
        c.dir_from = w.steps.empty() ? 1 : -w.steps.back().dir_to;
        c.dir_to = -g.edge_sign(s.edge) * c.dir_from;
        int arrive = g.edge_end(s.edge, 1 - s.end);
        c.closes = arrive == w.start &&
                   (w.steps.empty() ? c.dir_from : w.steps.front().dir_from) +
                           c.dir_to ==
                       0;
        out.push_back(c);
    }
    return out;
}

void append(const SignedGraph& g, DirectedWalk& w, const Candidate& c) {
    (void)g;
    w.steps.push_back({c.slot.edge, c.slot.end, c.dir_from, c.dir_to});
}

}  // namespace

std::optional<DirectedWalk> random_closed_directed_walk(const SignedGraph& g,
                                                        std::mt19937_64& rng,
                                                        int max_len) {
    if (g.edge_count() == 0) return std::nullopt;
    DirectedWalk w;
    w.start = g.edge_end(static_cast<int>(rng() % g.edge_count()), 0);
    int at = w.start;
    for (int len = 0; len < max_len; ++len) {
        auto cands = step_candidates(g, w, at);
        if (cands.empty()) return std::nullopt;
        std::vector<Candidate> closers;
        for (const auto& c : cands)
            if (c.closes) closers.push_back(c);
        if (!closers.empty() && rng() % 2 == 0) {
            append(g, w, closers[rng() % closers.size()]);
            return w;
        }
        const auto& c = cands[rng() % cands.size()];
        append(g, w, c);
        at = g.edge_end(c.slot.edge, 1 - c.slot.end);
        if (at == w.start && is_closed_walk(g, w) && rng() % 2 == 0) return w;
    }
    return std::nullopt;
}

std::optional<DirectedWalk> random_avoided_closed_walk(const SignedGraph& g,
                                                       std::mt19937_64& rng,
                                                       int max_len) {
    if (g.edge_count() == 0) return std::nullopt;
    DirectedWalk w;
    w.start = g.edge_end(static_cast<int>(rng() % g.edge_count()), 0);
    std::vector<int> verts = {w.start};
    int at = w.start;
    for (int len = 0; len < max_len; ++len) {
        auto cands = step_candidates(g, w, at);
        // A direction is a function on vertex-edge pairs, so every step must
        // keep the walk direction single-valued per slot. On top of that, an
        // extension must keep the walk midway-back avoided: arriving at a
        // previously visited vertex, the arrival value has to match the old
        // departure value. The closing arrival is exempt from the revisit
        // rule only.
        std::vector<Candidate> extenders, closers;
        for (const auto& c : cands) {
            bool consistent = true;
            for (const auto& s : w.steps) {
                if (s.edge != c.slot.edge) continue;
                std::array<int, 2> old{}, now{};
                old[s.from_end] = s.dir_from;
                old[s.to_end()] = s.dir_to;
                now[c.slot.end] = c.dir_from;
                now[1 - c.slot.end] = c.dir_to;
                if (old != now) consistent = false;
            }
            if (!consistent) continue;
            if (c.closes) closers.push_back(c);
            int arrive = g.edge_end(c.slot.edge, 1 - c.slot.end);
            bool ok = true;
            for (int pos = 0; pos + 1 < static_cast<int>(verts.size()) && ok;
                 ++pos)
                if (verts[pos] == arrive && w.steps[pos].dir_from != c.dir_to)
                    ok = false;
            // The current position also binds: a loop extension revisits it,
            // which only a negative loop survives.
            if (ok && at == arrive && c.dir_to != c.dir_from) ok = false;
            if (ok) extenders.push_back(c);
        }
        if (!closers.empty() && (extenders.empty() || rng() % 2 == 0)) {
            append(g, w, closers[rng() % closers.size()]);
            return w;
        }
        if (extenders.empty()) return std::nullopt;
        const auto& c = extenders[rng() % extenders.size()];
        append(g, w, c);
        at = g.edge_end(c.slot.edge, 1 - c.slot.end);
        verts.push_back(at);
    }
    return std::nullopt;
}

std::vector<SignedGraph> cycle_tree_family() {
    std::vector<SignedGraph> out;
    auto add = [&](int n, std::vector<std::pair<int, int>> ends,
                   std::vector<int> signs) {
        out.push_back(make_graph(n, ends, signs));
    };
    // Lone cycles.
    add(1, {{0, 0}}, {1});                             // positive loop, Type I
    add(1, {{0, 0}}, {-1});                            // negative loop, no parity
    add(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 1});       // balanced triangle
    add(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, -1});      // unbalanced triangle
    add(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {1, 1, 1, 1, 1});
    add(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {-1, 1, 1, 1, 1});
    // Two cycles sharing a vertex.
    add(1, {{0, 0}, {0, 0}}, {-1, -1});                // G2
    add(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}},
        {-1, 1, 1, -1, 1, 1});                         // two unbalanced triangles
    // Two cycles joined by a path.
    add(2, {{0, 0}, {0, 1}, {1, 1}}, {-1, 1, -1});     // G3
    add(2, {{0, 0}, {0, 1}, {1, 1}}, {-1, -1, -1});    // G3, negative bridge
    add(3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}}, {-1, 1, 1, -1});  // longer path
    add(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}},
        {-1, 1, 1, 1, -1, 1, 1});                      // triangle-path-triangle
    // Chains of three cycles.
    add(3, {{0, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 2}},
        {-1, 1, 1, 1, -1});                            // loop-triangle-loop
    add(3, {{0, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 2}},
        {-1, -1, 1, 1, -1});                           // parity fails in middle
    add(2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}}, {-1, 1, 1, -1});  // digon middle
    add(4, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}},
        {-1, 1, 1, 1, 1, -1});                         // Figure-6 shape
    add(4, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}},
        {-1, 1, 1, -1, 1, -1});                        // Figure-6, parity fails
    // Square with loops: G5 and variants.
    add(4, {{0, 0}, {2, 2}, {0, 1}, {1, 2}, {2, 3}, {3, 0}},
        {-1, -1, 1, 1, 1, 1});                         // G5
    add(4, {{0, 0}, {2, 2}, {0, 1}, {1, 2}, {2, 3}, {3, 0}},
        {-1, -1, -1, 1, 1, 1});                        // unbalanced square
    add(4, {{0, 0}, {1, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}},
        {-1, -1, 1, 1, 1, 1});                         // loops on adjacent corners
    // Star: three end-blocks around one middle cycle.
    add(4, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {2, 3}, {3, 0}},
        {-1, -1, -1, -1, 1, 1, 1});                    // unbalanced square, parity ok
    add(4, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {2, 3}, {3, 0}},
        {-1, -1, -1, 1, 1, 1, 1});                     // balanced square, parity fails
    // Junction plus path in one tree, 7 edges.
    add(5, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 4}},
        {-1, 1, 1, 1, 1, 1, -1});
    // Eight edges: pentagon middle with loop and dumbbell ends.
    add(5, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 2}, {4, 4}},
        {-1, -1, 1, 1, 1, 1, -1, -1});
    return out;
}

}  // namespace sgf
