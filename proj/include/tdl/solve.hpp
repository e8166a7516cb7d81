#pragma once

#include <string>
#include <vector>

#include "tdl/certify.hpp"
#include "tdl/graph.hpp"
#include "tdl/model.hpp"

namespace tdl {

struct SolveResult {
    int minimum_size = 0;
    std::vector<int> witness;      // lexicographically smallest minimum set
    long long checked_subsets = 0; // canonical position of the witness in scan order
    int bound_seed = 0;            // lower bound the enumeration started from
};

// Exact minimum-size set for a role: sizes ascend from the catalog lower
// bound, subsets of one size scan in lexicographic order, first success wins.
// jobs > 1 splits each size's rank range across threads; the result (witness
// and checked_subsets) is identical to the sequential scan.
SolveResult min_set(const Graph& g, const ModelSpec& model, SetRole role,
                    int size_cap = -1, int jobs = 1);

long long count_sets_of_size(const Graph& g, const ModelSpec& model, SetRole role, int size,
                             long long budget = 0);

struct DenseDynamoReport {
    int r = 0;
    long long count = 0;       // dynamos among the size-r sets
    long long total_sets = 0;  // C(n, r)
};

// Dense-graph guarantee: with 2*delta >= n + 2r every graph has size-r
// threshold dynamos; counts them all (PreconditionUnmet when too sparse).
DenseDynamoReport verify_dense_dynamos(const Graph& g, int r);

}  // namespace tdl
