#pragma once

#include <vector>

#include "tdl/graph.hpp"
#include "tdl/rational.hpp"

namespace tdl {

Graph make_complete(int n);
Graph make_cycle(int n);                       // node i adjacent to (i+1) mod n
Graph make_star(int n);                        // n nodes total, center 0
Graph make_complete_bipartite(int a, int b);   // sides 0..a-1 and a..a+b-1

// Hub-and-chain graph on nodes v_1..v_n (stored 0-indexed): every v_i with
// i >= r+1 is adjacent to the hubs v_1..v_{r-1} and to v_{i-1}. Seeding
// v_1..v_r black makes exactly one node turn per round, the slowest possible
// monotone spread. r = 1 degenerates to a path.
Graph make_path_of_cliques(int n, int r);

// Clique of size k = sqrt(alpha*n/(1-alpha)) with n/k - 1 leaves per clique
// node (k and n/k must be integral; alpha >= 1/2). The clique is a monotone
// dynamo of size ~sqrt(n).
Graph make_clique_with_leaves(int n, const Rat& alpha);

// d-dimensional torus on [length]^d, row-major flattening; 2d-regular.
Graph make_torus(int length, int dim);

// Bipartite double cover: x_i ~ y_j exactly when {v_i, v_j} is an edge.
// x_i maps to i, y_i to n+i. Doubling a bipartite graph gives two components.
Graph make_bipartite_double(const Graph& h);

// Chain of K_{r+1} blocks each missing one internal edge, closed off by an
// r-regular circulant filler; r-regular for even n, and for odd n the even
// construction on n-1 nodes plus one extra node attached to r block nodes.
// Every eternal set must contain all block nodes, so minimum eternal sets
// have size >= n - 2r - 1.
Graph make_eternal_tightness(int n, int r);

// Circulant on l nodes: offsets +-1..+-(r/2) for even r; odd r additionally
// links antipodes (needs even l). Requires r >= 2 (or the single edge l = 2).
Graph make_circulant_regular(int l, int r);

// Local search over partitions into floor(1/alpha) sets of size >= floor(alpha*n)
// (one set may be one smaller), moving single nodes while the cut strictly
// drops. The largest final set is robust for alpha-threshold; its size is at
// most 2*alpha*n + 1/alpha. Requires alpha <= 1/2.
std::vector<int> robust_via_partition(const Graph& g, const Rat& alpha);

// Majority analogue: near-balanced bipartition with locally minimal cut; the
// larger side is robust and has at most floor(n/2) + 1 nodes.
std::vector<int> robust_via_bipartition_majority(const Graph& g);

// Eternal set of size <= n/2 for the 2-threshold model on even-order graphs
// with min degree 2, built from the longest cycle: the whole cycle when short,
// alternate nodes when even, and otherwise a cycle spliced through the
// off-cycle nodes (one of the two splices is always even).
std::vector<int> eternal_r2_construct(const Graph& g, int node_cap = 0);

}  // namespace tdl
