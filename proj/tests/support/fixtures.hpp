#pragma once

// Deterministic graph corpus: named generator instances plus seeded random
// families. Every graph is a pure function of its parameters and seed, so a
// failing instance reproduces exactly.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tdl/construct.hpp"
#include "tdl/errors.hpp"
#include "tdl/graph.hpp"
#include "tdl/prng.hpp"

namespace fixtures {

struct Named {
    std::string name;
    tdl::Graph graph;
};

// Random attachment tree plus a percentage of the remaining pairs.
inline tdl::Graph random_connected(int n, int extra_percent, tdl::SplitMix64& rng) {
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.insert({static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!edges.count({u, v}) &&
                rng.below(100) < static_cast<std::uint64_t>(extra_percent))
                edges.insert({u, v});
    return tdl::Graph(n, {edges.begin(), edges.end()});
}

// Parity classes are the two sides; node v attaches to a random earlier node
// of the opposite parity, then extra opposite-parity pairs join.
inline tdl::Graph random_connected_bipartite(int n, int extra_percent, tdl::SplitMix64& rng) {
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int pick = static_cast<int>(rng.below(static_cast<std::uint64_t>((v + 1) / 2)));
        int u = v % 2 == 0 ? 2 * pick + 1 : 2 * pick;
        edges.insert({u, v});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((u + v) % 2 == 1 && !edges.count({u, v}) &&
                rng.below(100) < static_cast<std::uint64_t>(extra_percent))
                edges.insert({u, v});
    return tdl::Graph(n, {edges.begin(), edges.end()});
}

inline tdl::Graph ensure_min_degree(tdl::Graph g, int k, tdl::SplitMix64& rng) {
    while (g.min_degree() < k) {
        int v = 0;
        while (g.degree(v) >= k) ++v;
        std::vector<int> candidates;
        for (int u = 0; u < g.node_count(); ++u)
            if (u != v && !g.has_edge(u, v)) candidates.push_back(u);
        if (candidates.empty())
            tdl::fail(tdl::ErrorKind::InvalidParams, "graph too small for that degree");
        g = g.with_edge(v, candidates[rng.below(candidates.size())]);
    }
    return g;
}

// Any same-side pair of a bipartite graph is a non-edge; joining one creates
// an odd cycle. Non-bipartite input passes through.
inline tdl::Graph force_odd_cycle(tdl::Graph g) {
    auto sides = tdl::bipartition(g);
    if (!sides) return g;
    const auto& side = sides->side0.size() >= 2 ? sides->side0 : sides->side1;
    return g.with_edge(side[0], side[1]);
}

// The robust-set floor witness: a clique on 0..clique-1 attached to a path on
// the remaining nodes through the single edge {0, clique}.
inline tdl::Graph clique_attachment(int clique, int rest) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < clique; ++i)
        for (int j = i + 1; j < clique; ++j) edges.push_back({i, j});
    for (int i = 1; i < rest; ++i) edges.push_back({clique + i - 1, clique + i});
    edges.push_back({0, clique});
    return tdl::Graph(clique + rest, edges);
}

// One or two instances per generator family, capped by node count.
inline std::vector<Named> family_instances(int max_n) {
    std::vector<Named> out;
    auto add = [&](const std::string& name, tdl::Graph g) {
        if (g.node_count() <= max_n && g.is_connected())
            out.push_back({name, std::move(g)});
    };
    add("complete-4", tdl::make_complete(4));
    add("complete-6", tdl::make_complete(6));
    add("complete-8", tdl::make_complete(8));
    add("complete-10", tdl::make_complete(10));
    add("cycle-5", tdl::make_cycle(5));
    add("cycle-6", tdl::make_cycle(6));
    add("cycle-8", tdl::make_cycle(8));
    add("cycle-9", tdl::make_cycle(9));
    add("star-5", tdl::make_star(5));
    add("star-8", tdl::make_star(8));
    add("kbipartite-2-3", tdl::make_complete_bipartite(2, 3));
    add("kbipartite-3-4", tdl::make_complete_bipartite(3, 4));
    add("kbipartite-4-4", tdl::make_complete_bipartite(4, 4));
    add("cliquepath-7-1", tdl::make_path_of_cliques(7, 1));
    add("cliquepath-8-2", tdl::make_path_of_cliques(8, 2));
    add("cliquepath-8-3", tdl::make_path_of_cliques(8, 3));
    add("cliqueleaves-4", tdl::make_clique_with_leaves(4, tdl::Rat(1, 2)));
    add("cliqueleaves-9", tdl::make_clique_with_leaves(9, tdl::Rat(1, 2)));
    add("torus-4x1", tdl::make_torus(4, 1));
    add("torus-3x2", tdl::make_torus(3, 2));
    add("double-complete-3", tdl::make_bipartite_double(tdl::make_complete(3)));
    add("double-complete-4", tdl::make_bipartite_double(tdl::make_complete(4)));
    add("double-cycle-5", tdl::make_bipartite_double(tdl::make_cycle(5)));
    add("eternal-tight-8-2", tdl::make_eternal_tightness(8, 2));
    add("eternal-tight-10-2", tdl::make_eternal_tightness(10, 2));
    add("circulant-6-3", tdl::make_circulant_regular(6, 3));
    add("circulant-8-3", tdl::make_circulant_regular(8, 3));
    add("circulant-7-4", tdl::make_circulant_regular(7, 4));
    return out;
}

// Twenty assorted connected graphs: ten bipartite, ten with an odd cycle.
inline std::vector<Named> dichotomy_corpus() {
    tdl::SplitMix64 rng(0x5eedbeef);
    std::vector<Named> out;
    out.push_back({"cycle-6", tdl::make_cycle(6)});
    out.push_back({"cycle-10", tdl::make_cycle(10)});
    out.push_back({"star-7", tdl::make_star(7)});
    out.push_back({"kbipartite-3-3", tdl::make_complete_bipartite(3, 3)});
    out.push_back({"kbipartite-2-5", tdl::make_complete_bipartite(2, 5)});
    out.push_back({"path-9", tdl::make_path_of_cliques(9, 1)});
    out.push_back({"double-cycle-5", tdl::make_bipartite_double(tdl::make_cycle(5))});
    out.push_back({"random-bip-7", random_connected_bipartite(7, 20, rng)});
    out.push_back({"random-bip-11", random_connected_bipartite(11, 15, rng)});
    out.push_back({"random-bip-12", random_connected_bipartite(12, 10, rng)});
    out.push_back({"cycle-5", tdl::make_cycle(5)});
    out.push_back({"cycle-7", tdl::make_cycle(7)});
    out.push_back({"cycle-9", tdl::make_cycle(9)});
    out.push_back({"complete-4", tdl::make_complete(4)});
    out.push_back({"complete-6", tdl::make_complete(6)});
    out.push_back({"torus-3x2", tdl::make_torus(3, 2)});
    out.push_back({"circulant-8-3", tdl::make_circulant_regular(8, 3)});
    out.push_back({"cliqueleaves-9", tdl::make_clique_with_leaves(9, tdl::Rat(1, 2))});
    out.push_back({"odd-random-10", force_odd_cycle(random_connected(10, 25, rng))});
    out.push_back({"odd-random-12", force_odd_cycle(random_connected(12, 20, rng))});
    return out;
}

}  // namespace fixtures
