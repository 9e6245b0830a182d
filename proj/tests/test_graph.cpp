#include <random>

#include "doctest.h"
#include "sgf/generate.hpp"
#include "sgf/graph.hpp"

using namespace sgf;

namespace {

GraphSpec triangle_spec() {
    GraphSpec s;
    s.vertices = {"u", "v", "w"};
    s.edges = {{"e1", "u", "v", 1}, {"e2", "v", "w", 1}, {"e3", "w", "u", 1}};
    return s;
}

}  // namespace

TEST_CASE("validate_graph accepts a well-formed triangle") {
    CHECK(validate_graph(triangle_spec()).empty());
}

TEST_CASE("validate_graph reports dangling ends") {
    auto s = triangle_spec();
    s.edges.push_back({"e4", "u", "missing", 1});
    auto errs = validate_graph(s);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].find("dangling") != std::string::npos);
}

TEST_CASE("validate_graph reports duplicate ids and bad signs") {
    auto s = triangle_spec();
    s.edges.push_back({"e1", "u", "v", 1});
    s.edges.push_back({"e5", "u", "v", 0});
    auto errs = validate_graph(s);
    REQUIRE(errs.size() == 2);
    CHECK(errs[0].find("duplicate edge id") != std::string::npos);
    CHECK(errs[1].find("sign") != std::string::npos);
}

TEST_CASE("coupling: identity, negation, missing domain") {
    auto g = SignedGraph::build(triangle_spec());
    auto eps = Orientation::canonical(g);
    CHECK(coupling(eps, eps, 0) == 1);
    CHECK(coupling(eps, eps.negated(), 0) == -1);
    Orientation partial(g.edge_count());
    partial.set_edge(0, 1, -1);
    CHECK(coupling(eps, partial, 1) == 0);
    CHECK(coupling(eps, partial, 0) == 1);
}

TEST_CASE("boundary on a cyclically oriented balanced triangle is zero") {
    auto g = SignedGraph::build(triangle_spec());
    auto eps = Orientation::canonical(g);
    IntFlow f(3, 1);
    CHECK(is_flow(g, f, eps));
}

TEST_CASE("boundary coefficients per incidence class") {
    // negative loop: 2 eps f; positive loop: 0.
    auto neg = make_graph(1, {{0, 0}}, {-1});
    Orientation eps_n(1);
    eps_n.set_edge(0, 1, 1);
    CHECK(boundary(neg, {3}, eps_n)[0] == 6);
    CHECK_FALSE(is_flow(neg, {1}, eps_n));

    auto pos = make_graph(1, {{0, 0}}, {1});
    auto eps_p = Orientation::canonical(pos);
    CHECK(boundary(pos, {7}, eps_p)[0] == 0);
}

TEST_CASE("two opposed negative loops carry the unit flow") {
    auto g = make_graph(1, {{0, 0}, {0, 0}}, {-1, -1});
    Orientation eps(2);
    eps.set_edge(0, 1, 1);
    eps.set_edge(1, -1, -1);
    CHECK(is_flow(g, {1, 1}, eps));
    CHECK(is_flow(g, IntFlow(2, 0), eps));
}

TEST_CASE("support lists exactly the nonzero edges") {
    CHECK(support({0, 0, 0}).empty());
    CHECK(support({1, 0, -2}) == std::vector<int>{0, 2});
    CHECK(support({1, 1, 1}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("derived_orientation negates exactly the negative edges") {
    auto g = SignedGraph::build(triangle_spec());
    auto eps = Orientation::canonical(g);
    CHECK(derived_orientation(g, {1, 2, 0}, eps) == eps);
    IntFlow f = {1, -2, 1};
    auto epsf = derived_orientation(g, f, eps);
    CHECK(epsf.value(1, 0) == -eps.value(1, 0));
    CHECK(epsf.value(1, 1) == -eps.value(1, 1));
    CHECK(epsf.value(0, 0) == eps.value(0, 0));
    for (int e = 0; e < 3; ++e)
        CHECK(coupling(eps, epsf, e) * f[e] == std::llabs(f[e]));
}

TEST_CASE("sign_of_edge_set multiplies with multiplicity") {
    auto g = make_graph(2, {{0, 1}, {0, 1}, {0, 0}}, {1, 1, -1});
    CHECK(sign_of_edge_set(g, {}) == 1);
    CHECK(sign_of_edge_set(g, {0, 1, 2}) == -1);
    CHECK(sign_of_edge_set(g, {2, 2}) == 1);
}

TEST_CASE("slot-product law holds for every generated orientation") {
    for_each_connected_signed_multigraph(3, 3, [](const SignedGraph& g) {
        auto eps = Orientation::canonical(g);
        CHECK(orientation_violations(g, eps).empty());
        CHECK(orientation_violations(g, eps.negated()).empty());
    });
}

TEST_CASE("boundary is linear in the flow") {
    std::mt19937_64 rng(7);
    for_each_connected_signed_multigraph(3, 3, [&](const SignedGraph& g) {
        auto eps = Orientation::canonical(g);
        IntFlow f(g.edge_count()), h(g.edge_count()), sum(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            f[e] = static_cast<long long>(rng() % 9) - 4;
            h[e] = static_cast<long long>(rng() % 9) - 4;
            sum[e] = f[e] + h[e];
        }
        auto bf = boundary(g, f, eps), bh = boundary(g, h, eps),
             bs = boundary(g, sum, eps);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(bs[v] == bf[v] + bh[v]);
    });
}

TEST_CASE("edge_set_connected distinguishes components") {
    auto g = make_graph(4, {{0, 1}, {2, 3}}, {1, 1});
    CHECK_FALSE(edge_set_connected(g, {0, 1}));
    CHECK(edge_set_connected(g, {0}));
    CHECK_FALSE(edge_set_connected(g, {}));
}
