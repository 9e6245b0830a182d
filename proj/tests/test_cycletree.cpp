#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "sgf/cycletree.hpp"
#include "sgf/generate.hpp"
#include "sgf/oracle.hpp"

using namespace sgf;

namespace {

std::vector<int> all_edges(const SignedGraph& g) {
    std::vector<int> out(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) out[e] = e;
    return out;
}

CycleTree detect_or_fail(const SignedGraph& g) {
    auto det = detect_cycle_tree(g, all_edges(g));
    REQUIRE_MESSAGE(det.tree.has_value(), det.error);
    return std::move(*det.tree);
}

// All orientations of the subgraph, two per edge.
std::vector<Orientation> all_orientations(const SignedGraph& g,
                                          const std::vector<int>& edges) {
    std::vector<Orientation> out;
    int m = static_cast<int>(edges.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Orientation eps(g.edge_count());
        for (int i = 0; i < m; ++i) {
            int s0 = mask & (1u << i) ? -1 : 1;
            eps.set_edge(edges[i], s0, -g.edge_sign(edges[i]) * s0);
        }
        out.push_back(std::move(eps));
    }
    return out;
}

// Minimum length over closed vertex-sequences that use every edge at least
// once (directions play no role in the length bound).
int min_closed_cover_length(const SignedGraph& g, int cap) {
    int best = cap + 1;
    int m = g.edge_count();
    std::vector<int> count(m, 0);
    std::function<void(int, int, int, int)> dfs = [&](int start, int v, int len,
                                                      int covered) {
        if (len >= best) return;
        if (v == start && covered == m && len > 0) {
            best = len;
            return;
        }
        for (Slot s : g.slots_at(v)) {
            ++count[s.edge];
            dfs(start, g.edge_end(s.edge, 1 - s.end), len + 1,
                covered + (count[s.edge] == 1 ? 1 : 0));
            --count[s.edge];
        }
    };
    for (int v = 0; v < g.vertex_count(); ++v) dfs(v, v, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("detect: balanced triangle is one block cycle") {
    auto t = fix::triangle();
    auto tree = detect_or_fail(t.graph);
    REQUIRE(tree.cycles.size() == 1);
    CHECK(tree.paths.empty());
    CHECK(tree.cycles[0].sign == 1);
    CHECK(tree.intersection_vertices.empty());
}

TEST_CASE("detect: the dumbbell G3") {
    auto d = fix::g3();
    auto tree = detect_or_fail(d.graph);
    REQUIRE(tree.cycles.size() == 2);
    REQUIRE(tree.paths.size() == 1);
    CHECK(tree.paths[0].edges == std::vector<int>{2});
    CHECK(tree.intersection_vertices == std::vector<int>{0, 1});
    for (const auto& c : tree.cycles) CHECK(c.is_end_block());
}

TEST_CASE("detect: K4 is rejected, cycles share edges") {
    auto g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                        {1, 1, 1, 1, 1, 1});
    auto det = detect_cycle_tree(g, all_edges(g));
    REQUIRE_FALSE(det.tree.has_value());
    CHECK(det.error.find("not a simple cycle") != std::string::npos);
}

TEST_CASE("detect: rejections by shape") {
    SUBCASE("pendant edge") {
        auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}, {1, 1, 1, 1});
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE_FALSE(det.tree.has_value());
        CHECK(det.error.find("dangles") != std::string::npos);
    }
    SUBCASE("bare tree, no cycle") {
        auto g = make_graph(3, {{0, 1}, {1, 2}}, {1, 1});
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE_FALSE(det.tree.has_value());
    }
    SUBCASE("two paths meeting at one cycle vertex") {
        auto g = make_graph(
            5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 3}, {0, 4}, {4, 4}},
            {1, 1, 1, 1, -1, 1, -1});
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE_FALSE(det.tree.has_value());
        CHECK(det.error.find("vertex-disjoint") != std::string::npos);
    }
    SUBCASE("three loops at one vertex") {
        auto g = make_graph(1, {{0, 0}, {0, 0}, {0, 0}}, {-1, -1, -1});
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE_FALSE(det.tree.has_value());
        CHECK(det.error.find("not a tree") != std::string::npos);
    }
    SUBCASE("disconnected edge set") {
        auto g = make_graph(2, {{0, 0}, {1, 1}}, {1, 1});
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE_FALSE(det.tree.has_value());
        CHECK(det.error.find("connected") != std::string::npos);
    }
    SUBCASE("path endpoint on two cycles") {
        auto g = make_graph(6,
                            {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0},
                             {0, 5}, {5, 5}},
                            {-1, 1, 1, -1, 1, 1, 1, -1});
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE_FALSE(det.tree.has_value());
    }
}

TEST_CASE("parity: lone cycles and G5") {
    auto t = fix::triangle();
    CHECK(check_parity(t.graph, detect_or_fail(t.graph)).ok);

    auto unbal = make_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, -1});
    auto rep = check_parity(unbal, detect_or_fail(unbal));
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.cycles.size() == 1);
    CHECK(rep.cycles[0].intersection_count == 0);
    CHECK(rep.cycles[0].sign == -1);

    auto h = fix::g5();
    auto tree = detect_or_fail(h.graph);
    auto rep5 = check_parity(h.graph, tree);
    CHECK(rep5.ok);
    REQUIRE(tree.cycles.size() == 3);
}

TEST_CASE("find_direction on the triangle: one of the two circulations") {
    auto t = fix::triangle();
    auto tree = detect_or_fail(t.graph);
    auto dir = find_direction(t.graph, tree);
    REQUIRE(dir.has_value());
    auto all = all_orientations(t.graph, all_edges(t.graph));
    int count = 0;
    for (const auto& eps : all)
        if (is_direction(t.graph, tree, eps)) ++count;
    CHECK(count == 2);
    CHECK(is_direction(t.graph, tree, *dir));
    CHECK(dir->value(0, 0) == 1);  // deterministic global sign
}

TEST_CASE("find_direction on G5 matches the exhaustive filter") {
    auto h = fix::g5();
    auto tree = detect_or_fail(h.graph);
    auto dir = find_direction(h.graph, tree);
    REQUIRE(dir.has_value());

    std::vector<Orientation> valid;
    for (const auto& eps : all_orientations(h.graph, all_edges(h.graph)))
        if (is_direction(h.graph, tree, eps)) valid.push_back(eps);
    REQUIRE(valid.size() == 2);
    CHECK(valid[0].negated() == valid[1]);
    CHECK((*dir == valid[0] || *dir == valid[1]));

    // The fixture orientation is itself one of the two directions.
    CHECK(is_direction(h.graph, tree, h.eps));
}

TEST_CASE("find_direction refuses when parity fails") {
    auto unbal = make_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, -1});
    CHECK_FALSE(find_direction(unbal, detect_or_fail(unbal)).has_value());
}

TEST_CASE("direction existence and uniqueness over the cycle-tree family") {
    for (const auto& g : cycle_tree_family()) {
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE_MESSAGE(det.tree.has_value(), det.error);
        bool parity = check_parity(g, *det.tree).ok;
        int count = 0;
        for (const auto& eps : all_orientations(g, all_edges(g)))
            if (is_direction(g, *det.tree, eps)) ++count;
        CHECK(count == (parity ? 2 : 0));
        CHECK(find_direction(g, *det.tree).has_value() == parity);
    }
}

TEST_CASE("indicator values") {
    auto t = fix::triangle();
    CHECK(indicator(t.graph, detect_or_fail(t.graph)) ==
          std::vector<int>{1, 1, 1});
    auto d = fix::g3();
    CHECK(indicator(d.graph, detect_or_fail(d.graph)) ==
          std::vector<int>{1, 1, 2});
    auto h = fix::g5();
    CHECK(indicator(h.graph, detect_or_fail(h.graph)) ==
          std::vector<int>(6, 1));
}

TEST_CASE("characteristic_flow conserves and flips with the direction") {
    auto d = fix::g3();
    auto tree = detect_or_fail(d.graph);
    auto dir = find_direction(d.graph, tree);
    REQUIRE(dir.has_value());
    auto f = characteristic_flow(d.graph, tree, *dir, *dir);
    CHECK(f == IntFlow{1, 1, 2});
    CHECK(is_flow(d.graph, f, *dir));
    auto neg = characteristic_flow(d.graph, tree, dir->negated(), *dir);
    CHECK(neg == IntFlow{-1, -1, -2});

    auto h = fix::g5();
    auto tree5 = detect_or_fail(h.graph);
    auto f5 = characteristic_flow(h.graph, tree5, h.eps, h.eps);
    CHECK(f5 == IntFlow(6, 1));
    CHECK(is_flow(h.graph, f5, h.eps));
}

TEST_CASE("classify_circuit over the worked examples") {
    auto t = fix::triangle();
    CHECK(classify_circuit(t.graph, detect_or_fail(t.graph)).kind ==
          CircuitClass::TypeI);
    auto r = fix::g2();
    CHECK(classify_circuit(r.graph, detect_or_fail(r.graph)).kind ==
          CircuitClass::TypeII);
    auto d = fix::g3();
    CHECK(classify_circuit(d.graph, detect_or_fail(d.graph)).kind ==
          CircuitClass::TypeIII);
    auto h = fix::g5();
    CHECK(classify_circuit(h.graph, detect_or_fail(h.graph)).kind ==
          CircuitClass::NotCircuit);
}

TEST_CASE("canonical walk of the triangle has three steps") {
    auto t = fix::triangle();
    auto tree = detect_or_fail(t.graph);
    auto dir = find_direction(t.graph, tree);
    auto w = canonical_closed_walk(t.graph, tree, *dir);
    CHECK(w.length() == 3);
}

TEST_CASE("canonical walk of G3 is a p b p") {
    auto d = fix::g3();
    auto tree = detect_or_fail(d.graph);
    auto dir = find_direction(d.graph, tree);
    auto w = canonical_closed_walk(d.graph, tree, *dir);
    REQUIRE(w.length() == 4);
    std::vector<std::string> ids;
    for (const auto& s : w.steps) ids.push_back(d.graph.edge_id(s.edge));
    CHECK(ids == std::vector<std::string>{"a", "p", "b", "p"});
    CHECK(is_minimal_eulerian(d.graph, w));
    CHECK(is_elementary_walk(d.graph, w));
}

TEST_CASE("canonical walk of G5 and its minimum length") {
    auto h = fix::g5();
    auto tree = detect_or_fail(h.graph);
    auto dir = find_direction(h.graph, tree);
    auto w = canonical_closed_walk(h.graph, tree, *dir);
    REQUIRE(w.length() == 6);
    std::vector<std::string> ids;
    for (const auto& s : w.steps) ids.push_back(h.graph.edge_id(s.edge));
    CHECK(ids == std::vector<std::string>{"a", "e12", "e23", "b", "e34", "e41"});
    CHECK(is_minimal_eulerian(h.graph, w));
    CHECK_FALSE(is_elementary_walk(h.graph, w));
    // The canonical walk has minimum length among closed walks that use
    // every edge.
    CHECK(min_closed_cover_length(h.graph, 7) == 6);
}

TEST_CASE("canonical walks across the family satisfy the walk contract") {
    for (const auto& g : cycle_tree_family()) {
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE(det.tree.has_value());
        auto dir = find_direction(g, *det.tree);
        if (!dir) continue;
        auto w = canonical_closed_walk(g, *det.tree, *dir);
        CHECK(is_midway_back_avoided(g, w));
        CHECK_FALSE(has_triple_vertex(g, w));
        CHECK(is_minimal_eulerian(g, w));
        // Every double vertex of the walk is a cut-point: an intersection
        // vertex or the interior of a block path.
        auto verts = walk_vertices(g, w);
        std::map<int, int> count;
        for (size_t i = 0; i + 1 < verts.size(); ++i) ++count[verts[i]];
        std::set<int> cuts(det.tree->intersection_vertices.begin(),
                           det.tree->intersection_vertices.end());
        for (const auto& p : det.tree->paths)
            for (size_t i = 1; i + 1 < p.verts.size(); ++i)
                cuts.insert(p.verts[i]);
        for (const auto& [v, c] : count)
            if (c >= 2) CHECK(cuts.count(v) == 1);
    }
}

TEST_CASE("half decomposition of G5: two Type III circuits") {
    auto h = fix::g5();
    auto tree = detect_or_fail(h.graph);
    auto dir = find_direction(h.graph, tree);
    auto w = canonical_closed_walk(h.graph, tree, *dir);
    auto hd = half_integer_decomposition(h.graph, tree, w);
    REQUIRE(hd.summands.size() == 2);
    auto id_set = [&](const std::vector<int>& edges) {
        std::set<std::string> out;
        for (int e : edges) out.insert(h.graph.edge_id(e));
        return out;
    };
    CHECK(id_set(hd.summands[0].edges) ==
          std::set<std::string>{"a", "e12", "e23", "b"});
    CHECK(id_set(hd.summands[1].edges) ==
          std::set<std::string>{"b", "e34", "e41", "a"});
    for (const auto& s : hd.summands) {
        CHECK(s.circuit.kind == CircuitClass::TypeIII);
        CHECK(s.doubled_coefficient == 1);
    }
}

TEST_CASE("half decomposition rejects circuits") {
    auto d = fix::g3();
    auto tree = detect_or_fail(d.graph);
    auto dir = find_direction(d.graph, tree);
    auto w = canonical_closed_walk(d.graph, tree, *dir);
    CHECK_THROWS_AS(half_integer_decomposition(d.graph, tree, w),
                    std::invalid_argument);
}

TEST_CASE("contained cycle-trees sharing the block paths refuse the direction") {
    // Minimality of Eulerian cycle-trees, in the direction-carrying form: if
    // T1 is properly contained in T with T1's block paths among T's, then the
    // direction of T does not restrict to a direction of T1.
    for_each_connected_signed_multigraph(3, 4, [](const SignedGraph& g) {
        auto trees = enumerate_eulerian_cycle_trees(g);
        for (const auto& outer : trees) {
            auto dir = find_direction(g, outer.tree);
            REQUIRE(dir.has_value());
            for (const auto& inner : trees) {
                if (inner.edges.size() >= outer.edges.size()) continue;
                if (!std::includes(outer.edges.begin(), outer.edges.end(),
                                   inner.edges.begin(), inner.edges.end()))
                    continue;
                auto path_edges = [&](const CycleTree& t) {
                    std::set<int> out;
                    for (const auto& p : t.paths)
                        out.insert(p.edges.begin(), p.edges.end());
                    return out;
                };
                auto outer_paths = path_edges(outer.tree);
                bool paths_contained = true;
                for (int e : path_edges(inner.tree))
                    paths_contained = paths_contained && outer_paths.count(e);
                if (!paths_contained) continue;
                Orientation restricted(g.edge_count());
                for (int e : inner.edges)
                    restricted.set_edge(e, dir->value(e, 0), dir->value(e, 1));
                CHECK_FALSE(is_direction(g, inner.tree, restricted));
            }
        }
    });
}

TEST_CASE("half decomposition identity across the family") {
    for (const auto& g : cycle_tree_family()) {
        auto det = detect_cycle_tree(g, all_edges(g));
        REQUIRE(det.tree.has_value());
        const auto& t = *det.tree;
        if (!check_parity(g, t).ok) continue;
        if (classify_circuit(g, t).kind != CircuitClass::NotCircuit) continue;
        auto dir = find_direction(g, t);
        REQUIRE(dir.has_value());
        auto w = canonical_closed_walk(g, t, *dir);
        auto hd = half_integer_decomposition(g, t, w);

        int end_blocks = 0;
        for (const auto& c : t.cycles) end_blocks += c.is_end_block();
        CHECK(static_cast<int>(hd.summands.size()) == end_blocks);

        auto ind = indicator(g, t);
        std::vector<int> doubled(g.edge_count(), 0);
        for (const auto& s : hd.summands) {
            CHECK(s.circuit.kind == CircuitClass::TypeIII);
            for (int e : s.edges) doubled[e] += s.indicator[e];
        }
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK(doubled[e] == 2 * ind[e]);
    }
}
