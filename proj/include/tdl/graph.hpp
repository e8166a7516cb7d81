#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tdl/config.hpp"

namespace tdl {

// Simple undirected graph on nodes 0..n-1. Immutable after construction;
// with_edge() builds a new graph. Adjacency lists are kept sorted and a
// per-node neighbor bitmask is precomputed for the dynamics kernels.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int node_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const;
    int min_degree() const { return delta_; }
    bool is_connected() const { return connected_; }
    const std::vector<int>& neighbors(int v) const;
    const Config& neighbor_mask(int v) const;
    bool has_edge(int u, int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    Graph with_edge(int u, int v) const;

    void check_node(int v) const;  // InvalidNode

private:
    int n_ = 0;
    int m_ = 0;
    int delta_ = 0;
    bool connected_ = true;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Config> adj_mask_;
};

// Number of edges with exactly one endpoint in s.
int boundary_size(const Graph& g, const Config& s);
int boundary_size(const Graph& g, const std::vector<int>& s);

struct Bipartition {
    std::vector<int> side0;  // side containing node 0
    std::vector<int> side1;
};

// Both require a connected graph (GraphDisconnected otherwise).
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// A simple odd cycle as a node sequence (consecutive nodes adjacent, last
// adjacent to first), or nullopt when the graph is bipartite. Connected input.
std::optional<std::vector<int>> find_odd_cycle(const Graph& g);

// Longest simple cycle by exhaustive DFS with pruning; nullopt when acyclic.
// Guarded by node_cap (0 = library default) since the search is exponential.
std::optional<std::vector<int>> longest_cycle_exact(const Graph& g, int node_cap = 0);

// Default cap for the exponential enumerations; TDL_MAX_NODES overrides.
int enumeration_node_cap();

}  // namespace tdl
