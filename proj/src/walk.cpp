#include "sgf/walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgf {

std::vector<int> walk_vertices(const SignedGraph& g, const DirectedWalk& w) {
    std::vector<int> u;
    u.reserve(w.steps.size() + 1);
    u.push_back(w.start);
    for (const auto& s : w.steps) u.push_back(g.slot_vertex(s.to_slot()));
    return u;
}

std::vector<std::string> validate_walk(const SignedGraph& g,
                                       const DirectedWalk& w) {
    std::vector<std::string> errs;
    if (w.steps.empty()) {
        errs.push_back("walk has no steps");
        return errs;
    }
    if (w.start < 0 || w.start >= g.vertex_count()) {
        errs.push_back("walk start is not a vertex");
        return errs;
    }
    int at = w.start;
    for (int i = 0; i < w.length(); ++i) {
        const auto& s = w.steps[i];
        if (s.edge < 0 || s.edge >= g.edge_count()) {
            errs.push_back("step " + std::to_string(i + 1) + ": bad edge index");
            return errs;
        }
        if (g.slot_vertex(s.from_slot()) != at)
            errs.push_back("step " + std::to_string(i + 1) +
                           ": vertex mismatch with preceding step");
        if (s.dir_from * s.dir_to != -g.edge_sign(s.edge))
            errs.push_back("step " + std::to_string(i + 1) +
                           ": direction product violates -sign on edge '" +
                           g.edge_id(s.edge) + "'");
        if (i + 1 < w.length() && s.dir_to + w.steps[i + 1].dir_from != 0)
            errs.push_back("step " + std::to_string(i + 1) +
                           ": no alternation into step " + std::to_string(i + 2));
        at = g.slot_vertex(s.to_slot());
    }
    return errs;
}

bool is_closed_walk(const SignedGraph& g, const DirectedWalk& w) {
    if (w.steps.empty()) return false;
    return g.slot_vertex(w.steps.back().to_slot()) == w.start &&
           w.steps.front().dir_from + w.steps.back().dir_to == 0;
}

int walk_sign(const SignedGraph& g, const DirectedWalk& w) {
    int s = 1;
    for (const auto& step : w.steps) s *= g.edge_sign(step.edge);
    return s;
}

bool is_midway_back_avoided(const SignedGraph& g, const DirectedWalk& w) {
    auto u = walk_vertices(g, w);
    int n = w.length();
    // dir(u_b, x_b) is dir_to of step b; dir(u_a, x_{a+1}) is dir_from of
    // step a+1. Pairs with b = n are exempt.
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (u[a] == u[b] &&
                w.steps[b - 1].dir_to != w.steps[a].dir_from)
                return false;
    return true;
}

bool has_triple_vertex(const SignedGraph& g, const DirectedWalk& w) {
    auto u = walk_vertices(g, w);
    std::unordered_map<int, int> count;
    for (int i = 0; i + 1 < static_cast<int>(u.size()); ++i)
        if (++count[u[i]] >= 3) return true;
    return false;
}

bool is_eulerian_walk(const SignedGraph& g, const DirectedWalk& w) {
    if (!is_closed_walk(g, w)) return false;
    if (walk_sign(g, w) != 1) return false;
    // Repeated edges must carry identical direction values at both slots.
    std::unordered_map<int, std::array<int, 2>> seen;
    for (const auto& s : w.steps) {
        std::array<int, 2> vals;
        vals[s.from_end] = s.dir_from;
        vals[s.to_end()] = s.dir_to;
        auto [it, fresh] = seen.emplace(s.edge, vals);
        if (!fresh && it->second != vals) return false;
    }
    return true;
}

IntFlow characteristic_vector(const SignedGraph& g, const DirectedWalk& w,
                              const Orientation& eps) {
    if (!is_closed_walk(g, w))
        throw std::invalid_argument(
            "characteristic_vector requires a closed directed walk");
    IntFlow f(g.edge_count(), 0);
    for (const auto& s : w.steps) {
        // Coupling of eps with the walk direction at this traversal; the two
        // slots agree by the product law.
        f[s.edge] += eps.value(s.from_slot()) * s.dir_from;
    }
    return f;
}

DirectedWalk reverse_walk(const SignedGraph& g, const DirectedWalk& w) {
    DirectedWalk out;
    if (w.steps.empty()) return out;
    out.start = g.slot_vertex(w.steps.back().to_slot());
    out.steps.reserve(w.steps.size());
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
        WalkStep s;
        s.edge = it->edge;
        s.from_end = it->to_end();
        s.dir_from = it->dir_to;
        s.dir_to = it->dir_from;
        out.steps.push_back(s);
    }
    return out;
}

DirectedWalk rotate_walk(const SignedGraph& g, const DirectedWalk& w, int k) {
    int n = w.length();
    if (n == 0) return w;
    k = ((k % n) + n) % n;
    DirectedWalk out;
    out.steps.reserve(n);
    for (int i = 0; i < n; ++i) out.steps.push_back(w.steps[(k + i) % n]);
    out.start = g.slot_vertex(out.steps.front().from_slot());
    return out;
}

std::unordered_map<int, int> edge_multiplicities(const DirectedWalk& w) {
    std::unordered_map<int, int> mult;
    for (const auto& s : w.steps) ++mult[s.edge];
    return mult;
}

}  // namespace sgf
