#include <algorithm>
#include <vector>

#include "tdl/certify.hpp"
#include "tdl/construct.hpp"
#include "tdl/graph.hpp"
#include "tdl/model.hpp"
#include "tdl/prng.hpp"

#include "support/fixtures.hpp"
#include "support/harness.hpp"
#include "support/reference.hpp"

using namespace tdl;

namespace {

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

void basic_families() {
    Graph k5 = make_complete(5);
    CHECK_EQ(k5.edge_count(), 10);
    CHECK(is_regular(k5, 4));
    CHECK_EQ(make_complete(1).node_count(), 1);
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_complete(0));

    Graph c6 = make_cycle(6);
    CHECK(is_regular(c6, 2));
    CHECK(c6.has_edge(5, 0));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_cycle(2));

    Graph s6 = make_star(6);
    CHECK_EQ(s6.degree(0), 5);
    for (int v = 1; v < 6; ++v) CHECK_EQ(s6.degree(v), 1);
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_star(1));

    Graph k23 = make_complete_bipartite(2, 3);
    CHECK_EQ(k23.node_count(), 5);
    CHECK_EQ(k23.edge_count(), 6);
    CHECK_EQ(k23.degree(0), 3);
    CHECK_EQ(k23.degree(2), 2);
    CHECK(is_bipartite(k23));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_complete_bipartite(0, 3));
}

void path_of_cliques_shape() {
    Graph h = make_path_of_cliques(8, 2);
    CHECK_EQ(h.node_count(), 8);
    CHECK_EQ(h.edge_count(), 12);
    CHECK_EQ(h.degree(0), 6);
    CHECK_EQ(h.degree(1), 1);
    CHECK_EQ(h.degree(7), 2);
    CHECK(h.is_connected());

    Graph path = make_path_of_cliques(5, 1);
    CHECK_EQ(path.edge_count(), 4);
    CHECK_EQ(path.degree(0), 1);
    CHECK_EQ(path.degree(2), 2);

    Graph h3 = make_path_of_cliques(6, 3);
    CHECK_EQ(h3.degree(2), 1);
    CHECK(h3.has_edge(0, 5) && h3.has_edge(1, 5) && h3.has_edge(4, 5));
    CHECK(!h3.has_edge(2, 5));

    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_path_of_cliques(3, 3));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_path_of_cliques(5, 0));
}

void clique_with_leaves_shape() {
    Graph g = make_clique_with_leaves(9, Rat(1, 2));
    CHECK_EQ(g.node_count(), 9);
    CHECK_EQ(g.edge_count(), 9);
    for (int v = 0; v < 3; ++v) CHECK_EQ(g.degree(v), 4);
    for (int v = 3; v < 9; ++v) CHECK_EQ(g.degree(v), 1);
    CHECK(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
    CHECK(g.has_edge(0, 3) && g.has_edge(0, 4) && g.has_edge(1, 5));
    // The clique floods the whole graph at threshold 1/2.
    CHECK(is_dynamo(g, ModelSpec::alpha_threshold(Rat(1, 2)), {0, 1, 2}).verdict);
    CHECK(is_robust(g, ModelSpec::alpha_threshold(Rat(1, 2)), {0, 1, 2}).verdict);

    Graph big = make_clique_with_leaves(16, Rat(4, 5));
    CHECK_EQ(big.node_count(), 16);
    for (int v = 0; v < 8; ++v) CHECK_EQ(big.degree(v), 8);

    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_clique_with_leaves(9, Rat(1, 3)));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_clique_with_leaves(9, Rat(1)));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_clique_with_leaves(7, Rat(1, 2)));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_clique_with_leaves(12, Rat(1, 2)));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_clique_with_leaves(9, Rat(4, 5)));
}

void torus_shape() {
    Graph t = make_torus(3, 2);
    CHECK_EQ(t.node_count(), 9);
    CHECK_EQ(t.edge_count(), 18);
    CHECK(is_regular(t, 4));
    CHECK(t.has_edge(0, 1) && t.has_edge(0, 2) && t.has_edge(0, 3) && t.has_edge(0, 6));
    CHECK(t.is_connected());

    Graph ring = make_torus(4, 1);
    CHECK(is_regular(ring, 2));
    CHECK_EQ(ring.edge_count(), 4);

    Graph t42 = make_torus(4, 2);
    CHECK_EQ(t42.node_count(), 16);
    CHECK(is_regular(t42, 4));

    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_torus(2, 2));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_torus(3, 0));
    CHECK_THROWS_KIND(ErrorKind::CapExceeded, make_torus(101, 3));
}

void bipartite_double_shape() {
    Graph hex = make_bipartite_double(make_complete(3));
    CHECK_EQ(hex.node_count(), 6);
    CHECK((hex.edges() == std::vector<std::pair<int, int>>{
                              {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}}));
    CHECK(hex.is_connected());
    CHECK(is_bipartite(hex));
    auto cyc = longest_cycle_exact(hex);
    CHECK(cyc && cyc->size() == 6);

    Graph split = make_bipartite_double(make_cycle(4));
    CHECK_EQ(split.node_count(), 8);
    CHECK_EQ(split.edge_count(), 8);
    CHECK(!split.is_connected());

    Graph c10 = make_bipartite_double(make_cycle(5));
    CHECK(c10.is_connected());
    CHECK(is_regular(c10, 2));
    auto ten = longest_cycle_exact(c10);
    CHECK(ten && ten->size() == 10);
}

void eternal_tightness_shape() {
    Graph g = make_eternal_tightness(18, 3);
    CHECK_EQ(g.node_count(), 18);
    CHECK_EQ(g.edge_count(), 27);
    CHECK(is_regular(g, 3));
    CHECK(g.is_connected());

    Graph h = make_eternal_tightness(10, 2);
    CHECK(is_regular(h, 2));
    CHECK(h.is_connected());

    Graph odd = make_eternal_tightness(17, 3);
    CHECK_EQ(odd.node_count(), 17);
    CHECK(odd.is_connected());
    CHECK_EQ(odd.degree(16), 3);
    for (int v = 0; v < 16; ++v)
        CHECK_EQ(odd.degree(v), (v == 1 || v == 5 || v == 9) ? 4 : 3);

    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_eternal_tightness(6, 3));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_eternal_tightness(13, 3));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_eternal_tightness(9, 2));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_eternal_tightness(8, 1));
}

void circulant_shape() {
    Graph g = make_circulant_regular(8, 3);
    CHECK(is_regular(g, 3));
    CHECK(g.has_edge(0, 1) && g.has_edge(0, 4));
    Graph h = make_circulant_regular(9, 4);
    CHECK(is_regular(h, 4));
    CHECK(h.has_edge(0, 2));
    CHECK(make_circulant_regular(5, 2).edges() == make_cycle(5).edges());
    CHECK_EQ(make_circulant_regular(2, 1).edge_count(), 1);
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_circulant_regular(9, 3));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_circulant_regular(3, 4));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, make_circulant_regular(3, 1));
}

void robust_partition_output() {
    CHECK((robust_via_partition(make_cycle(8), Rat(1, 2)) ==
           std::vector<int>{0, 1, 2, 3}));
    CHECK((robust_via_partition(make_complete(6), Rat(1, 3)) ==
           std::vector<int>{0, 2, 3}));

    tdl::SplitMix64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 5 + static_cast<int>(rng.below(36));
        Graph g = fixtures::random_connected(n, 10 + static_cast<int>(rng.below(30)), rng);
        for (Rat alpha : {Rat(1, 4), Rat(1, 3), Rat(1, 2)}) {
            std::vector<int> out = robust_via_partition(g, alpha);
            CHECK(!out.empty());
            CHECK(is_robust(g, ModelSpec::alpha_threshold(alpha), out).verdict);
            // |out| <= 2*alpha*n + 1/alpha, compared exactly.
            long long p = alpha.num, q = alpha.den;
            CHECK(static_cast<long long>(out.size()) * p * q <= 2 * p * p * n + q * q);
        }
    }
    CHECK_THROWS_KIND(ErrorKind::InvalidParams,
                      robust_via_partition(make_cycle(6), Rat(2, 3)));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams,
                      robust_via_partition(make_cycle(6), Rat(0)));
}

void robust_bipartition_output() {
    CHECK((robust_via_bipartition_majority(make_complete(2)) == std::vector<int>{0, 1}));
    CHECK((robust_via_bipartition_majority(make_complete(1)) == std::vector<int>{0}));

    tdl::SplitMix64 rng(4096);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng.below(30));
        Graph g = fixtures::random_connected(n, 10 + static_cast<int>(rng.below(40)), rng);
        std::vector<int> out = robust_via_bipartition_majority(g);
        CHECK(is_robust(g, ModelSpec::majority(), out).verdict);
        CHECK(static_cast<int>(out.size()) <= n / 2 + 1);
    }
}

void eternal_construction_even_cycles() {
    CHECK((eternal_r2_construct(make_cycle(6)) == std::vector<int>{0, 2, 4}));

    // Even alternate case on a complete graph: any Hamiltonian cycle works.
    std::vector<int> k6 = eternal_r2_construct(make_complete(6));
    CHECK_EQ(k6.size(), 3u);
    CHECK(is_eternal(make_complete(6), ModelSpec::r_threshold(2), k6).verdict);

    // Short longest cycle: the whole cycle is returned.
    Graph twin(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK((eternal_r2_construct(twin) == std::vector<int>{0, 1, 2}));
    CHECK(is_eternal(twin, ModelSpec::r_threshold(2), {0, 1, 2}).verdict);
}

void eternal_construction_odd_cycles() {
    // Odd longest cycle spliced through an off-cycle node.
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 7; ++i) edges.push_back({i, (i + 1) % 7});
        edges.push_back({0, 7});
        edges.push_back({3, 7});
        Graph g(8, edges);
        std::vector<int> out = eternal_r2_construct(g);
        CHECK((out == std::vector<int>{0, 3, 5}));
        CHECK(is_eternal(g, ModelSpec::r_threshold(2), out).verdict);
    }
    {
        // The walk off the odd cycle returns to its anchor.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 7; ++i) edges.push_back({i, (i + 1) % 7});
        edges.push_back({0, 7});
        edges.push_back({7, 8});
        edges.push_back({8, 9});
        edges.push_back({9, 0});
        Graph g(10, edges);
        std::vector<int> out = eternal_r2_construct(g);
        CHECK((out == std::vector<int>{0, 7, 8, 9}));
        CHECK(is_eternal(g, ModelSpec::r_threshold(2), out).verdict);
    }
    {
        // The walk closes into a loop that never touches the cycle.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 7; ++i) edges.push_back({i, (i + 1) % 7});
        edges.push_back({7, 8});
        edges.push_back({8, 9});
        edges.push_back({7, 9});
        edges.push_back({0, 7});
        Graph g(10, edges);
        std::vector<int> out = eternal_r2_construct(g);
        CHECK((out == std::vector<int>{7, 8, 9}));
        CHECK(is_eternal(g, ModelSpec::r_threshold(2), out).verdict);
    }
}

void eternal_construction_random_graphs() {
    tdl::SplitMix64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6 + 2 * static_cast<int>(rng.below(4));
        Graph g = fixtures::ensure_min_degree(
            fixtures::random_connected(n, 15 + static_cast<int>(rng.below(25)), rng), 2, rng);
        std::vector<int> out = eternal_r2_construct(g);
        CHECK(is_eternal(g, ModelSpec::r_threshold(2), out).verdict);
        CHECK(2 * static_cast<int>(out.size()) <= n);
    }
    CHECK_THROWS_KIND(ErrorKind::PreconditionUnmet, eternal_r2_construct(make_cycle(7)));
    CHECK_THROWS_KIND(ErrorKind::PreconditionUnmet,
                      eternal_r2_construct(make_path_of_cliques(6, 1)));
    CHECK_THROWS_KIND(ErrorKind::GraphDisconnected,
                      eternal_r2_construct(Graph(4, {{0, 1}, {2, 3}})));
    CHECK_THROWS_KIND(ErrorKind::CapExceeded, eternal_r2_construct(make_cycle(26)));
}

}  // namespace

int main() {
    RUN_TEST(basic_families);
    RUN_TEST(path_of_cliques_shape);
    RUN_TEST(clique_with_leaves_shape);
    RUN_TEST(torus_shape);
    RUN_TEST(bipartite_double_shape);
    RUN_TEST(eternal_tightness_shape);
    RUN_TEST(circulant_shape);
    RUN_TEST(robust_partition_output);
    RUN_TEST(robust_bipartition_output);
    RUN_TEST(eternal_construction_even_cycles);
    RUN_TEST(eternal_construction_odd_cycles);
    RUN_TEST(eternal_construction_random_graphs);
    return harness::summary("construct_test");
}
