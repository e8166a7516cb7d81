#include "tdl/construct.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tdl/errors.hpp"

namespace tdl {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

long long exact_isqrt(long long t) {
    long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(t))));
    while (s > 0 && s * s > t) --s;
    while ((s + 1) * (s + 1) <= t) ++s;
    return s * s == t ? s : -1;
}

// Offsets +-1..+-(r/2), plus the antipode for odd r (requires even l).
EdgeList circulant_edges(int l, int r) {
    EdgeList edges;
    for (int d = 1; d <= r / 2; ++d)
        for (int i = 0; i < l; ++i) edges.push_back({i, (i + d) % l});
    if (r % 2 == 1)
        for (int i = 0; i < l / 2; ++i) edges.push_back({i, i + l / 2});
    return edges;
}

EdgeList eternal_tightness_even(int n, int r) {
    int block = r + 1;
    int blocks = n / block - 1;
    if (blocks < 1)
        fail(ErrorKind::InvalidParams,
             "even order must be at least " + std::to_string(2 * block));
    int filler = n - blocks * block;  // >= r + 1 by choice of the block count
    if (r % 2 == 1 && filler % 2 == 1)
        fail(ErrorKind::InvalidParams, "no regular filler of odd order exists");
    EdgeList edges;
    for (int i = 0; i < blocks; ++i) {
        int base = i * block;
        for (int a = 0; a < block; ++a)
            for (int b = a + 1; b < block; ++b)
                if (!(a == 0 && b == 1)) edges.push_back({base + a, base + b});
        if (i + 1 < blocks) edges.push_back({base + 1, base + block});
    }
    int fbase = blocks * block;
    for (auto [a, b] : circulant_edges(filler, r))
        if (!(std::min(a, b) == 0 && std::max(a, b) == 1))
            edges.push_back({fbase + a, fbase + b});
    edges.push_back({fbase + 0, 0});
    edges.push_back({fbase + 1, (blocks - 1) * block + 1});
    return edges;
}

}  // namespace

Graph make_complete(int n) {
    if (n < 1) fail(ErrorKind::InvalidParams, "complete graph needs at least 1 node");
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) fail(ErrorKind::InvalidParams, "cycle needs at least 3 nodes");
    EdgeList edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph make_star(int n) {
    if (n < 2) fail(ErrorKind::InvalidParams, "star needs at least 2 nodes");
    EdgeList edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) fail(ErrorKind::InvalidParams, "both sides need at least 1 node");
    EdgeList edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, edges);
}

Graph make_path_of_cliques(int n, int r) {
    if (r < 1) fail(ErrorKind::InvalidParams, "threshold r must be at least 1");
    if (n < r + 1)
        fail(ErrorKind::InvalidParams, "needs at least r + 1 = " + std::to_string(r + 1) +
                                           " nodes");
    EdgeList edges;
    for (int j = r; j < n; ++j) {
        for (int h = 0; h + 1 < r; ++h) edges.push_back({h, j});
        edges.push_back({j - 1, j});
    }
    return Graph(n, edges);
}

Graph make_clique_with_leaves(int n, const Rat& alpha) {
    if (alpha < Rat(1, 2) || alpha >= Rat(1))
        fail(ErrorKind::InvalidParams, "needs 1/2 <= alpha < 1");
    long long p = alpha.num;
    long long q = alpha.den;
    long long ratio_den = q - p;
    if ((p * n) % ratio_den != 0)
        fail(ErrorKind::InvalidParams, "alpha*n/(1-alpha) is not an integer");
    long long k = exact_isqrt(p * n / ratio_den);
    if (k < 1) fail(ErrorKind::InvalidParams, "alpha*n/(1-alpha) is not a perfect square");
    if (n % k != 0) fail(ErrorKind::InvalidParams, "clique size must divide the node count");
    int kk = static_cast<int>(k);
    int leaves = n / kk - 1;
    EdgeList edges;
    for (int i = 0; i < kk; ++i)
        for (int j = i + 1; j < kk; ++j) edges.push_back({i, j});
    for (int i = 0; i < kk; ++i)
        for (int o = 0; o < leaves; ++o) edges.push_back({i, kk + i * leaves + o});
    return Graph(n, edges);
}

Graph make_torus(int length, int dim) {
    if (length < 3) fail(ErrorKind::InvalidParams, "side length must be at least 3");
    if (dim < 1) fail(ErrorKind::InvalidParams, "dimension must be at least 1");
    long long count = 1;
    for (int i = 0; i < dim; ++i) {
        count *= length;
        if (count > 1'000'000)
            fail(ErrorKind::CapExceeded, "torus larger than 1000000 nodes refused");
    }
    int n = static_cast<int>(count);
    EdgeList edges;
    std::vector<int> coord(dim);
    for (int idx = 0; idx < n; ++idx) {
        int rest = idx;
        for (int a = dim - 1; a >= 0; --a) {
            coord[a] = rest % length;
            rest /= length;
        }
        int stride = 1;
        for (int a = dim - 1; a >= 0; --a) {
            int wrap = coord[a] + 1 == length ? idx - (length - 1) * stride : idx + stride;
            edges.push_back({idx, wrap});
            stride *= length;
        }
    }
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

Graph make_bipartite_double(const Graph& h) {
    int n = h.node_count();
    EdgeList edges;
    for (auto [u, v] : h.edges()) {
        edges.push_back({u, n + v});
        edges.push_back({v, n + u});
    }
    return Graph(2 * n, edges);
}

Graph make_eternal_tightness(int n, int r) {
    if (r < 2) fail(ErrorKind::InvalidParams, "threshold r must be at least 2");
    if (n % 2 == 0) return Graph(n, eternal_tightness_even(n, r));
    int block = r + 1;
    int blocks = (n - 1) / block - 1;
    if (blocks < r)
        fail(ErrorKind::InvalidParams, "odd order must be at least " +
                                           std::to_string(block * block + 1));
    EdgeList edges = eternal_tightness_even(n - 1, r);
    for (int i = 0; i < r; ++i) edges.push_back({n - 1, i * block + 1});
    return Graph(n, edges);
}

Graph make_circulant_regular(int l, int r) {
    if (r < 1) fail(ErrorKind::InvalidParams, "degree must be at least 1");
    if (r == 1) {
        if (l != 2) fail(ErrorKind::InvalidParams, "degree 1 only exists on 2 nodes");
        return Graph(2, {{0, 1}});
    }
    if (l < r + 1) fail(ErrorKind::InvalidParams, "needs at least r + 1 nodes");
    if (r % 2 == 1 && l % 2 == 1)
        fail(ErrorKind::InvalidParams, "odd degree needs an even node count");
    return Graph(l, circulant_edges(l, r));
}

std::vector<int> robust_via_partition(const Graph& g, const Rat& alpha) {
    if (alpha <= Rat(0) || alpha > Rat(1, 2))
        fail(ErrorKind::InvalidParams, "needs 0 < alpha <= 1/2");
    int n = g.node_count();
    int sets = static_cast<int>(alpha.den / alpha.num);          // floor(1/alpha) >= 2
    int quota = static_cast<int>(alpha.num * n / alpha.den);     // floor(alpha*n)
    std::vector<int> part(n);
    std::vector<int> size(sets, 0);
    // Contiguous near-balanced start: every set begins at size >= quota.
    int big = n % sets;
    int at = 0;
    for (int s = 0; s < sets; ++s) {
        int want = n / sets + (s < big ? 1 : 0);
        for (int i = 0; i < want; ++i) part[at++] = s;
        size[s] = want;
    }
    // A partition stays admissible when every set keeps size >= quota - 1 and
    // at most one set is below quota. Single-node moves that strictly reduce
    // the cut preserve admissibility, so the scan ends in a local minimum.
    auto legal = [&](int from, int to) {
        int deficient = 0;
        for (int s = 0; s < sets; ++s) {
            int sz = size[s] + (s == to) - (s == from);
            if (sz < quota - 1) return false;
            if (sz < quota) ++deficient;
        }
        return deficient <= 1;
    };
    std::vector<int> around(sets);
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = 0; v < n && !moved; ++v) {
            std::fill(around.begin(), around.end(), 0);
            for (int w : g.neighbors(v)) ++around[part[w]];
            int own = part[v];
            for (int to = 0; to < sets && !moved; ++to) {
                if (to == own || around[to] <= around[own] || !legal(own, to)) continue;
                part[v] = to;
                --size[own];
                ++size[to];
                moved = true;
            }
        }
    }
    int best = 0;
    for (int s = 1; s < sets; ++s)
        if (size[s] > size[best]) best = s;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (part[v] == best) out.push_back(v);
    return out;
}

std::vector<int> robust_via_bipartition_majority(const Graph& g) {
    int n = g.node_count();
    if (n == 1) return {0};
    int lo = n / 2 - 1;
    int hi = n / 2 + 1;
    std::vector<int> side(n);
    int first = (n + 1) / 2;
    for (int v = 0; v < n; ++v) side[v] = v < first ? 0 : 1;
    int size0 = first;
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = 0; v < n && !moved; ++v) {
            int inside = 0;
            for (int w : g.neighbors(v))
                if (side[w] == side[v]) ++inside;
            int outside = g.degree(v) - inside;
            if (outside <= inside) continue;
            int next0 = size0 + (side[v] == 0 ? -1 : 1);
            if (std::min(next0, n - next0) < lo || std::max(next0, n - next0) > hi) continue;
            side[v] = 1 - side[v];
            size0 = next0;
            moved = true;
        }
    }
    int winner = size0 >= n - size0 ? 0 : 1;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (side[v] == winner) out.push_back(v);
    return out;
}

namespace {

std::vector<int> alternate_nodes(const std::vector<int>& cycle) {
    std::vector<int> out;
    for (size_t i = 0; i < cycle.size(); i += 2) out.push_back(cycle[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> sorted_nodes(std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

}  // namespace

std::vector<int> eternal_r2_construct(const Graph& g, int node_cap) {
    if (!g.is_connected()) fail(ErrorKind::GraphDisconnected, "graph is not connected");
    int n = g.node_count();
    if (n % 2 != 0) fail(ErrorKind::PreconditionUnmet, "even node count required");
    if (g.min_degree() < 2) fail(ErrorKind::PreconditionUnmet, "minimum degree 2 required");
    std::vector<int> cycle = *longest_cycle_exact(g, node_cap);
    int k = static_cast<int>(cycle.size());
    if (2 * k <= n) return sorted_nodes(cycle);
    if (k % 2 == 0) return alternate_nodes(cycle);
    // Odd long cycle: walk off it through the remaining nodes until the walk
    // hits the cycle again or closes on itself; every outcome yields a cycle
    // of at most n/2 nodes or an even one to take alternate nodes from.
    std::vector<char> on_cycle(n, 0);
    std::unordered_map<int, int> cycle_pos;
    for (int i = 0; i < k; ++i) {
        on_cycle[cycle[i]] = 1;
        cycle_pos[cycle[i]] = i;
    }
    int y1 = -1, u = -1;
    for (int v = 0; v < n && y1 < 0; ++v) {
        if (on_cycle[v]) continue;
        for (int w : g.neighbors(v)) {
            if (on_cycle[w]) {
                y1 = v;
                u = w;
                break;
            }
        }
    }
    std::vector<int> walk = {y1};
    std::unordered_map<int, int> walk_pos = {{y1, 0}};
    int prev = u, cur = y1, hit = -1;
    while (hit < 0) {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        if (on_cycle[next]) {
            hit = next;
        } else if (walk_pos.count(next)) {
            // Closed entirely off the cycle: that loop has < n/2 nodes.
            return sorted_nodes({walk.begin() + walk_pos[next], walk.end()});
        } else {
            walk_pos[next] = static_cast<int>(walk.size());
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
    }
    if (hit == u) {
        // The walk returned to its anchor: anchor plus walk is a short cycle.
        walk.push_back(u);
        return sorted_nodes(walk);
    }
    // Splice the walk into the cycle; the two resulting cycles have lengths of
    // different parity since k is odd, so one of them is even.
    int pu = cycle_pos[u], pw = cycle_pos[hit];
    std::vector<int> with_arc;
    for (int i = pu; i != pw; i = (i + 1) % k) with_arc.push_back(cycle[i]);
    with_arc.push_back(cycle[pw]);
    if ((with_arc.size() + walk.size()) % 2 == 0) {
        with_arc.insert(with_arc.end(), walk.rbegin(), walk.rend());
        return alternate_nodes(with_arc);
    }
    std::vector<int> other_arc;
    for (int i = pw; i != pu; i = (i + 1) % k) other_arc.push_back(cycle[i]);
    other_arc.push_back(cycle[pu]);
    other_arc.insert(other_arc.end(), walk.begin(), walk.end());
    return alternate_nodes(other_arc);
}

}  // namespace tdl
