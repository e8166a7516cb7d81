#include "tdl/solve.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>
#include <thread>
#include <utility>

#include "tdl/bounds.hpp"
#include "tdl/dynamics.hpp"
#include "tdl/errors.hpp"

namespace tdl {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// Lexicographically next k-subset of {0..n-1} as a sorted vector.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Combination at lexicographic position 'rank' (combinatorial number system).
std::vector<int> unrank_combination(long long rank, int n, int k) {
    std::vector<int> c(k);
    int v = 0;
    for (int i = 0; i < k; ++i) {
        for (;; ++v) {
            long long block = binom(n - 1 - v, k - 1 - i);
            if (rank < block) {
                c[i] = v++;
                break;
            }
            rank -= block;
        }
    }
    return c;
}

// Per-thread membership test with preallocated buffers; mirrors certify()
// verdicts exactly but never allocates in the scan loop.
struct SetTester {
    const Graph& g;
    const ModelSpec& model;
    SetRole role;
    int cap;
    Config members, prev2, prev1, cur;

    SetTester(const Graph& graph, const ModelSpec& m, SetRole rl)
        : g(graph),
          model(m),
          role(rl),
          cap(default_step_cap(graph)),
          members(graph.node_count()),
          prev2(graph.node_count()),
          prev1(graph.node_count()),
          cur(graph.node_count()) {}

    bool structural_robust() {
        if (model.is_monotone()) return true;
        long long p = model.alpha.num;
        long long q = model.alpha.den;
        for (int v : members.nodes()) {
            int inside = members.count_and(g.neighbor_mask(v));
            switch (model.kind) {
                case ModelKind::RThreshold:
                    if (inside < model.r) return false;
                    break;
                case ModelKind::AlphaThreshold:
                    if (q * inside < p * g.degree(v)) return false;
                    break;
                case ModelKind::Majority:
                    if (inside < g.degree(v) - inside) return false;
                    break;
                default: break;
            }
        }
        return true;
    }

    bool dynamic_run() {
        prev1 = members;
        for (int t = 1;; ++t) {
            step_into(g, model, prev1, cur);
            if (role == SetRole::MonotoneDynamo && !prev1.subset_of(cur)) return false;
            if (role == SetRole::Eternal && cur.none()) return false;
            if (role != SetRole::Eternal && cur.all()) return true;
            if (cur == prev1) return role == SetRole::Eternal;
            if (t >= 2 && cur == prev2) return role == SetRole::Eternal;
            if (t >= cap) return false;
            std::swap(prev2, prev1);
            std::swap(prev1, cur);
        }
    }

    bool operator()(const std::vector<int>& s) {
        if (s.empty()) return false;
        members.clear();
        for (int v : s) members.set(v, true);
        if (role == SetRole::Robust) return structural_robust();
        if (role != SetRole::Eternal && members.all()) return true;
        return dynamic_run();
    }
};

// Smallest hit rank among sizes-k subsets, or -1. Parallel chunks by rank
// range with a min reduce, so the winner matches the sequential scan.
long long scan_size(const Graph& g, const ModelSpec& model, SetRole role, int k, int jobs) {
    int n = g.node_count();
    long long total = binom(n, k);
    if (jobs <= 1 || total < 4096) {
        SetTester tester(g, model, role);
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        for (long long rank = 0;; ++rank) {
            if (tester(comb)) return rank;
            if (!next_combination(comb, n)) return -1;
        }
    }
    int workers = static_cast<int>(std::min<long long>(jobs, total));
    std::atomic<long long> best(LLONG_MAX);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        long long lo = total * w / workers;
        long long hi = total * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
            SetTester tester(g, model, role);
            std::vector<int> comb = unrank_combination(lo, n, k);
            for (long long rank = lo; rank < hi; ++rank) {
                if ((rank & 1023) == 0 && best.load(std::memory_order_relaxed) < rank) return;
                if (tester(comb)) {
                    long long seen = best.load();
                    while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
                    }
                    return;
                }
                if (rank + 1 < hi) next_combination(comb, n);
            }
        });
    }
    for (auto& t : pool) t.join();
    long long found = best.load();
    return found == LLONG_MAX ? -1 : found;
}

}  // namespace

SolveResult min_set(const Graph& g, const ModelSpec& model, SetRole role, int size_cap, int jobs) {
    validate(g, model);
    int n = g.node_count();
    if (n > enumeration_node_cap())
        fail(ErrorKind::CapExceeded, "exact search on " + std::to_string(n) +
                                         " nodes exceeds the enumeration cap of " +
                                         std::to_string(enumeration_node_cap()));
    // Catalog lower bounds beyond n only exclude proper subsets; the full node
    // set always qualifies, so the seed is clamped to n.
    long long lower = bounds_for_role(g, model, role).lower();
    int seed = static_cast<int>(std::clamp(lower, 1LL, static_cast<long long>(n)));
    int limit = size_cap >= 0 ? std::min(size_cap, n) : n;
    SolveResult res;
    res.bound_seed = seed;
    long long checked_before = 0;
    for (int k = seed; k <= limit; ++k) {
        long long rank = scan_size(g, model, role, k, jobs);
        if (rank >= 0) {
            res.minimum_size = k;
            res.witness = unrank_combination(rank, n, k);
            res.checked_subsets = checked_before + rank + 1;
            return res;
        }
        checked_before += binom(n, k);
    }
    fail(ErrorKind::NoSolution, "no qualifying set within size cap " + std::to_string(limit));
}

long long count_sets_of_size(const Graph& g, const ModelSpec& model, SetRole role, int size,
                             long long budget) {
    validate(g, model);
    int n = g.node_count();
    if (size < 0 || size > n) fail(ErrorKind::InvalidParams, "size out of range");
    if (n > enumeration_node_cap())
        fail(ErrorKind::CapExceeded, "exact count on " + std::to_string(n) +
                                         " nodes exceeds the enumeration cap of " +
                                         std::to_string(enumeration_node_cap()));
    if (budget <= 0) budget = 20'000'000;
    long long total = binom(n, size);
    if (total > budget)
        fail(ErrorKind::CapExceeded, "counting " + std::to_string(total) +
                                         " subsets exceeds the budget of " +
                                         std::to_string(budget));
    SetTester tester(g, model, role);
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    long long hits = 0;
    if (size == 0) return tester(comb) ? 1 : 0;
    do {
        if (tester(comb)) ++hits;
    } while (next_combination(comb, n));
    return hits;
}

DenseDynamoReport verify_dense_dynamos(const Graph& g, int r) {
    ModelSpec model = ModelSpec::r_threshold(r);
    validate(g, model);
    int n = g.node_count();
    if (2 * g.min_degree() < n + 2 * r)
        fail(ErrorKind::PreconditionUnmet,
             "needs 2*min_degree >= n + 2r, got 2*" + std::to_string(g.min_degree()) + " < " +
                 std::to_string(n) + " + " + std::to_string(2 * r));
    DenseDynamoReport rep;
    rep.r = r;
    rep.total_sets = binom(n, r);
    rep.count = count_sets_of_size(g, model, SetRole::Dynamo, r);
    return rep;
}

}  // namespace tdl
