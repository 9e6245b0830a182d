#include "sgf/fra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace sgf {

namespace {

/* Flow reduction on a nonnegative flow under a fixed orientation.
 *
 * State is the half-open walk u_0 x_1 u_1 ... x_l u_l. Steps:
 *   0  start with the smallest-id support edge
 *   1  branch on whether u_l already occurs in u_0..u_{l-1}
 *   2  extend by a residual-support edge leaving u_l opposite to the arrival
 *   3  u_l hit a double vertex: cut out a closed walk (forms 12/13)
 *   4  u_l hit a single vertex enclosed by a double pair: cut (forms 12/14)
 *   5  u_l hit a single vertex: close directly (form 12) or keep extending
 *
 * The vertex multiplicity in the prefix never exceeds two: step 3 fires the
 * moment a third visit appears.
 */
struct FraRun {
    const SignedGraph& g;
    const IntFlow& target;  // nonnegative flow being reduced
    const Orientation& epsf;
    FraTrace* trace;

    std::vector<WalkStep> steps;
    std::vector<int> verts;          // u_0..u_l
    std::vector<long long> mult;     // walk multiplicity per edge
    std::vector<std::vector<int>> occur;  // vertex -> positions among u_0..u_l

    FraRun(const SignedGraph& graph, const IntFlow& f, const Orientation& eps,
           FraTrace* tr)
        : g(graph), target(f), epsf(eps), trace(tr),
          mult(graph.edge_count(), 0), occur(graph.vertex_count()) {}

    void log(const std::string& line) {
        if (trace) trace->lines.push_back(line);
    }

    int l() const { return static_cast<int>(steps.size()); }
    int arrival_dir() const { return steps.back().dir_to; }

    void push(int e, int from_end) {
        steps.push_back({e, from_end, epsf.value(e, from_end),
                         epsf.value(e, 1 - from_end)});
        ++mult[e];
        int v = g.edge_end(e, 1 - from_end);
        occur[v].push_back(l());
        verts.push_back(v);
    }

    // Smallest-id residual edge leaving v with slot value `need`; loops prefer
    // slot order 0 -> 1. Returns nullopt when the vertex is exhausted.
    std::optional<Slot> pick(int v, int need, int banned_edge) const {
        std::optional<Slot> best;
        for (Slot s : g.slots_at(v)) {
            if (s.edge == banned_edge) continue;
            if (mult[s.edge] >= target[s.edge]) continue;
            if (epsf.value(s) != need) continue;
            if (!best || g.edge_rank(s.edge) < g.edge_rank(best->edge) ||
                (s.edge == best->edge && s.end < best->end))
                best = s;
        }
        return best;
    }

    DirectedWalk emit_range(int from_pos) {
        // Closed walk u_from x_{from+1} ... x_l u_l.
        DirectedWalk w;
        w.start = verts[from_pos];
        w.steps.assign(steps.begin() + from_pos, steps.end());
        return w;
    }

    DirectedWalk emit_spliced(int alpha, int beta, int gamma) {
        // Form (14): u_beta x_beta ... x_{alpha+1} u_alpha (u_gamma)
        // x_{gamma+1} ... x_l u_l with the front segment reversed.
        DirectedWalk w;
        w.start = verts[beta];
        for (int i = beta - 1; i >= alpha; --i) {
            const WalkStep& s = steps[i];
            w.steps.push_back({s.edge, s.to_end(), s.dir_to, s.dir_from});
        }
        for (int i = gamma; i < l(); ++i) w.steps.push_back(steps[i]);
        return w;
    }

    DirectedWalk run() {
        // Step 0.
        int x1 = -1;
        for (int e : g.edges_by_id())
            if (target[e] > 0) {
                x1 = e;
                break;
            }
        if (x1 < 0) throw std::invalid_argument("flow has empty support");
        verts.push_back(g.edge_end(x1, 0));
        occur[verts[0]].push_back(0);
        push(x1, 0);
        log("step 1: start edge '" + g.edge_id(x1) + "'");

        while (true) {
            invariant(l() <= std::accumulate(target.begin(), target.end(), 0LL),
                      "flow reduction overran the flow multiset");
            int v = verts.back();
            const auto& pos = occur[v];  // positions of v, ending with l

            if (pos.size() == 1) {  // Step 1 -> Step 2: fresh vertex
                extend(v);
                continue;
            }
            int beta = pos[pos.size() - 2];  // greatest earlier index
            int dep_beta = steps[beta].dir_from;  // eps_f(u_beta, x_{beta+1})

            if (occur_count_before_l(v) >= 2) {
                // Step 3: u_beta is a double point; stop with (12) or (13).
                int alpha = pos[pos.size() - 3];
                if (arrival_dir() == -dep_beta) {
                    log("stop: step 3, form (12)");
                    return emit_range(beta);
                }
                log("stop: step 3, form (13)");
                return emit_range(alpha);
            }

            // Step 4: a double pair u_alpha = u_gamma straddling beta?
            auto pair = straddling_double(beta);
            if (pair) {
                auto [alpha, gamma] = *pair;
                if (arrival_dir() == -dep_beta) {
                    log("stop: step 4, form (12)");
                    return emit_range(beta);
                }
                log("stop: step 4, form (14)");
                return emit_spliced(alpha, beta, gamma);
            }

            // Step 5.
            if (arrival_dir() == -dep_beta) {
                log("stop: step 5, form (12)");
                return emit_range(beta);
            }
            extend(v);
        }
    }

    int occur_count_before_l(int v) const {
        // occurrences among u_0..u_{l-1}; the arrival at l is excluded
        return static_cast<int>(occur[v].size()) - 1;
    }

    // Smallest gamma, then largest alpha, over double vertices with
    // alpha < beta < gamma (all among u_0..u_{l-1}).
    std::optional<std::pair<int, int>> straddling_double(int beta) const {
        std::optional<std::pair<int, int>> best;
        for (int gamma = beta + 1; gamma < l(); ++gamma) {
            const auto& p = occur[verts[gamma]];
            if (p.size() < 2 || p[0] >= beta || p[1] != gamma) continue;
            best = {p[0], gamma};
            break;  // smallest gamma wins; alpha is unique for that vertex
        }
        return best;
    }

    void extend(int v) {
        int need = -arrival_dir();
        auto s = pick(v, need, steps.back().edge);
        invariant(s.has_value(),
                  "step 2: residual flow has no admissible edge at '" +
                      g.vertex_id(v) + "'");
        push(s->edge, s->end);
        log("step " + std::to_string(l()) + ": extend by edge '" +
            g.edge_id(s->edge) + "'");
    }
};

// Contract of every emitted walk: closed, midway-back avoided, no triple
// vertices, Eulerian, minimal, and within the flow multiset. Violations are
// bugs, never input errors.
void check_output_contract(const SignedGraph& g, const DirectedWalk& w,
                           const IntFlow& bound) {
    invariant(validate_walk(g, w).empty(), "reduction walk fails validation");
    invariant(is_closed_walk(g, w), "reduction walk is not closed");
    invariant(is_midway_back_avoided(g, w),
              "reduction walk is not midway-back avoided");
    invariant(!has_triple_vertex(g, w), "reduction walk has a triple vertex");
    invariant(is_eulerian_walk(g, w), "reduction walk is not Eulerian");
    invariant(is_minimal_eulerian(g, w),
              "reduction walk is not a minimal Eulerian walk");
    for (const auto& [e, m] : edge_multiplicities(w))
        invariant(m <= bound[e], "reduction walk exceeds the flow multiset");
    // Double vertices are cut-points of the support subgraph: this is what
    // makes the support an Eulerian cycle-tree, already certified by the
    // minimality check above.
}

}  // namespace

DirectedWalk fra_run(const SignedGraph& g, const IntFlow& f,
                     const Orientation& eps, FraTrace* trace) {
    if (is_trivial(f)) throw std::invalid_argument("flow has empty support");
    if (!is_flow(g, f, eps))
        throw std::invalid_argument("fra_run requires a conservative flow");
    Orientation epsf = derived_orientation(g, f, eps);
    IntFlow absf = abs_flow(f);
    FraRun run(g, absf, epsf, trace);
    DirectedWalk w = run.run();
    check_output_contract(g, w, absf);
    return w;
}

Decomposition decompose_flow(const SignedGraph& g, const IntFlow& f,
                             const Orientation& eps, FraTrace* trace) {
    if (!is_flow(g, f, eps))
        throw std::invalid_argument("decompose_flow requires a conservative flow");
    Decomposition out;
    if (is_trivial(f)) return out;

    Orientation epsf = derived_orientation(g, f, eps);
    IntFlow residual = abs_flow(f);
    while (!is_trivial(residual)) {
        FraRun run(g, residual, epsf, trace);
        DirectedWalk w = run.run();
        check_output_contract(g, w, residual);

        Decomposition::Term term;
        term.walk = w;
        auto mult = edge_multiplicities(w);
        std::vector<int> supp;
        for (const auto& [e, m] : mult) supp.push_back(e);
        auto det = detect_cycle_tree(g, supp);
        invariant(det.tree.has_value(),
                  "reduction walk support is not a cycle-tree: " + det.error);
        term.tree = std::move(*det.tree);
        invariant(check_parity(g, term.tree).ok,
                  "reduction walk support fails the Parity Condition");
        term.circuit = classify_circuit(g, term.tree);

        term.flow.assign(g.edge_count(), 0);
        for (const auto& [e, m] : mult) {
            term.flow[e] = coupling(eps, epsf, e) * m;
            residual[e] -= m;
            invariant(residual[e] >= 0, "residual flow went negative");
            invariant(term.flow[e] * f[e] > 0,
                      "decomposition term disagrees in sign with the flow");
        }
        invariant(is_flow(g, term.flow, eps),
                  "decomposition term is not a flow");
        out.terms.push_back(std::move(term));
    }
    return out;
}

IndecomposabilityResult is_indecomposable(const SignedGraph& g, const IntFlow& f,
                                          const Orientation& eps) {
    if (is_trivial(f))
        throw std::invalid_argument("the trivial flow is neither decomposable "
                                    "nor indecomposable");
    if (!is_flow(g, f, eps))
        throw std::invalid_argument("is_indecomposable requires a conservative flow");

    IndecomposabilityResult res;
    auto supp = support(f);
    auto det = detect_cycle_tree(g, supp);
    if (!det.tree) {
        res.reason = "support is not a cycle-tree: " + det.error;
        return res;
    }
    if (!check_parity(g, *det.tree).ok) {
        res.reason = "support cycle-tree fails the Parity Condition";
        return res;
    }
    auto ind = indicator(g, *det.tree);
    for (int e : supp)
        if (std::llabs(f[e]) != ind[e]) {
            res.reason = "|f| differs from the indicator on edge '" +
                         g.edge_id(e) + "'";
            return res;
        }
    // eps_f restricted to the witness tree must be one of its two directions.
    Orientation epsf = derived_orientation(g, f, eps);
    Orientation restricted(g.edge_count());
    for (int e : supp) restricted.set_edge(e, epsf.value(e, 0), epsf.value(e, 1));
    invariant(is_direction(g, *det.tree, restricted),
              "eps_f is not a direction of the witness cycle-tree");
    res.indecomposable = true;
    res.witness = std::move(*det.tree);
    return res;
}

}  // namespace sgf
