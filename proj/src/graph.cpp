#include "tdl/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <string>

#include "tdl/errors.hpp"

namespace tdl {

int enumeration_node_cap() {
    static const int cap = [] {
        const char* env = std::getenv("TDL_MAX_NODES");
        if (env != nullptr) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 24;
    }();
    return cap;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) fail(ErrorKind::InvalidParams, "negative node count");
    adj_.assign(static_cast<size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorKind::InvalidParams,
                 "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 0.." +
                     std::to_string(n - 1));
        if (u == v)
            fail(ErrorKind::InvalidParams, "self-loop at node " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            fail(ErrorKind::InvalidParams,
                 "duplicate edge {" + std::to_string(key.first) + "," +
                     std::to_string(key.second) + "}");
        edges_.push_back(key);
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    m_ = static_cast<int>(edges_.size());
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    adj_mask_.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj_mask_.push_back(Config::from_nodes(n, adj_[static_cast<size_t>(v)]));
    }

    delta_ = n == 0 ? 0 : n;
    for (int v = 0; v < n; ++v)
        delta_ = std::min(delta_, static_cast<int>(adj_[static_cast<size_t>(v)].size()));

    connected_ = true;
    if (n > 1) {
        std::vector<char> vis(static_cast<size_t>(n), 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj_[static_cast<size_t>(v)]) {
                if (!vis[static_cast<size_t>(u)]) {
                    vis[static_cast<size_t>(u)] = 1;
                    ++reached;
                    q.push(u);
                }
            }
        }
        connected_ = reached == n;
    }
}

int Graph::degree(int v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_node(v);
    return adj_[static_cast<size_t>(v)];
}

const Config& Graph::neighbor_mask(int v) const {
    check_node(v);
    return adj_mask_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    if (u == v) fail(ErrorKind::InvalidParams, "self-loop at node " + std::to_string(u));
    if (has_edge(u, v))
        fail(ErrorKind::InvalidParams,
             "edge {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
    auto extended = edges_;
    extended.push_back(std::minmax(u, v));
    return Graph(n_, extended);
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= n_)
        fail(ErrorKind::InvalidNode,
             "node " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

int boundary_size(const Graph& g, const Config& s) {
    if (s.size() != g.node_count())
        fail(ErrorKind::DimensionMismatch, "set length differs from node count");
    int total = 0;
    for (int v : s.nodes()) total += g.neighbor_mask(v).count_andnot(s);
    return total;
}

int boundary_size(const Graph& g, const std::vector<int>& s) {
    return boundary_size(g, Config::from_nodes(g.node_count(), s));
}

namespace {

struct ColorData {
    bool bipartite = true;
    std::vector<int> color;   // 0/1
    std::vector<int> parent;  // BFS tree
    std::vector<int> depth;
};

ColorData two_color(const Graph& g) {
    int n = g.node_count();
    if (!g.is_connected()) fail(ErrorKind::GraphDisconnected, "graph is not connected");
    ColorData d;
    d.color.assign(static_cast<size_t>(n), -1);
    d.parent.assign(static_cast<size_t>(n), -1);
    d.depth.assign(static_cast<size_t>(n), 0);
    if (n == 0) return d;
    std::queue<int> q;
    q.push(0);
    d.color[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (d.color[static_cast<size_t>(u)] == -1) {
                d.color[static_cast<size_t>(u)] = d.color[static_cast<size_t>(v)] ^ 1;
                d.parent[static_cast<size_t>(u)] = v;
                d.depth[static_cast<size_t>(u)] = d.depth[static_cast<size_t>(v)] + 1;
                q.push(u);
            } else if (d.color[static_cast<size_t>(u)] == d.color[static_cast<size_t>(v)]) {
                d.bipartite = false;
            }
        }
    }
    return d;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
    ColorData d = two_color(g);
    if (!d.bipartite) return std::nullopt;
    Bipartition b;
    for (int v = 0; v < g.node_count(); ++v) {
        (d.color[static_cast<size_t>(v)] == 0 ? b.side0 : b.side1).push_back(v);
    }
    return b;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
    ColorData d = two_color(g);
    if (d.bipartite) return std::nullopt;
    // First edge joining two equal-depth-parity nodes closes an odd cycle
    // through their paths to the lowest common BFS ancestor.
    for (auto [u, v] : g.edges()) {
        if (d.color[static_cast<size_t>(u)] != d.color[static_cast<size_t>(v)]) continue;
        std::vector<int> up_u, up_v;
        int a = u, b = v;
        while (d.depth[static_cast<size_t>(a)] > d.depth[static_cast<size_t>(b)]) {
            up_u.push_back(a);
            a = d.parent[static_cast<size_t>(a)];
        }
        while (d.depth[static_cast<size_t>(b)] > d.depth[static_cast<size_t>(a)]) {
            up_v.push_back(b);
            b = d.parent[static_cast<size_t>(b)];
        }
        while (a != b) {
            up_u.push_back(a);
            up_v.push_back(b);
            a = d.parent[static_cast<size_t>(a)];
            b = d.parent[static_cast<size_t>(b)];
        }
        std::vector<int> cycle = up_u;
        cycle.push_back(a);
        for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) cycle.push_back(*it);
        return cycle;
    }
    fail(ErrorKind::InvalidParams, "internal: odd cycle expected but not found");
}

namespace {

struct CycleSearch {
    const Graph& g;
    int start = 0;
    std::vector<char> visited;
    std::vector<int> path;
    std::vector<int> best;
    int usable = 0;  // unvisited nodes with index >= start

    explicit CycleSearch(const Graph& graph) : g(graph) {}

    void dfs(int v) {
        for (int u : g.neighbors(v)) {
            if (u == start && path.size() >= 3 && path.size() > best.size()) best = path;
            if (u <= start || visited[static_cast<size_t>(u)]) continue;
            if (best.size() >= static_cast<size_t>(g.node_count())) return;
            if (path.size() + static_cast<size_t>(usable) <= best.size()) return;
            visited[static_cast<size_t>(u)] = 1;
            --usable;
            path.push_back(u);
            dfs(u);
            path.pop_back();
            ++usable;
            visited[static_cast<size_t>(u)] = 0;
        }
    }
};

}  // namespace

std::optional<std::vector<int>> longest_cycle_exact(const Graph& g, int node_cap) {
    int cap = node_cap > 0 ? node_cap : enumeration_node_cap();
    int n = g.node_count();
    if (n > cap)
        fail(ErrorKind::CapExceeded, "longest cycle search limited to " + std::to_string(cap) +
                                         " nodes, got " + std::to_string(n));
    CycleSearch search(g);
    search.visited.assign(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (search.best.size() >= static_cast<size_t>(n)) break;
        search.start = s;
        search.usable = n - s - 1;
        search.path = {s};
        search.visited.assign(static_cast<size_t>(n), 0);
        search.visited[static_cast<size_t>(s)] = 1;
        search.dfs(s);
    }
    if (search.best.empty()) return std::nullopt;
    return search.best;
}

}  // namespace tdl
