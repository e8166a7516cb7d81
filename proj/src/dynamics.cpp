#include "tdl/dynamics.hpp"

#include <algorithm>
#include <utility>

#include "tdl/errors.hpp"
#include "tdl/prng.hpp"

namespace tdl {

int default_step_cap(const Graph& g) { return 4 * g.edge_count() + 2 * g.node_count() + 4; }

void step_into(const Graph& g, const ModelSpec& model, const Config& c, Config& out) {
    int n = g.node_count();
    if (c.size() != n) fail(ErrorKind::DimensionMismatch, "configuration size differs from graph");
    if (out.size() != n) out = Config(n);
    long long p = model.alpha.num;
    long long q = model.alpha.den;
    for (int v = 0; v < n; ++v) {
        int black = c.count_and(g.neighbor_mask(v));
        bool next = false;
        switch (model.kind) {
            case ModelKind::RThreshold: next = black >= model.r; break;
            case ModelKind::RMonotone: next = c.get(v) || black >= model.r; break;
            case ModelKind::AlphaThreshold: next = q * black >= p * g.degree(v); break;
            case ModelKind::AlphaMonotone:
                next = c.get(v) || q * black >= p * g.degree(v);
                break;
            case ModelKind::Majority: {
                int white = g.degree(v) - black;
                next = black == white ? c.get(v) : black > white;
                break;
            }
        }
        out.set(v, next);
    }
}

Config step(const Graph& g, const ModelSpec& model, const Config& c) {
    Config out(g.node_count());
    step_into(g, model, c, out);
    return out;
}

Trajectory simulate(const Graph& g, const ModelSpec& model, const Config& c0, int step_cap) {
    if (step_cap <= 0) step_cap = default_step_cap(g);
    Trajectory t;
    t.configs.push_back(c0);
    for (int i = 1;; ++i) {
        Config next = step(g, model, t.configs.back());
        if (next == t.configs[i - 1]) {
            t.stabilization_time = i - 1;
            t.periodicity = 1;
            break;
        }
        if (i >= 2 && next == t.configs[i - 2]) {
            t.stabilization_time = i - 2;
            t.periodicity = 2;
            break;
        }
        t.configs.push_back(std::move(next));
        if (i >= step_cap) {
            t.stabilization_time = step_cap;
            t.periodicity = 0;
            t.step_cap_hit = true;
            return t;
        }
    }
    // History is exactly C_0 .. C_{T+p-1}; the cycle is its tail.
    for (int i = t.stabilization_time; i < static_cast<int>(t.configs.size()); ++i)
        t.cycle.push_back(t.configs[i]);
    return t;
}

RunSummary run_summary(const Graph& g, const ModelSpec& model, const Config& c0, int step_cap) {
    if (step_cap <= 0) step_cap = default_step_cap(g);
    int n = g.node_count();
    if (c0.size() != n) fail(ErrorKind::DimensionMismatch, "configuration size differs from graph");
    RunSummary s;
    Config prev2(n), prev1 = c0, cur(n);
    s.min_black = prev1.count();
    s.reached_all_black = prev1.all();
    s.reached_all_white = prev1.none();
    for (int t = 1;; ++t) {
        step_into(g, model, prev1, cur);
        s.monotone = s.monotone && prev1.subset_of(cur);
        s.min_black = std::min(s.min_black, cur.count());
        s.reached_all_black = s.reached_all_black || cur.all();
        s.reached_all_white = s.reached_all_white || cur.none();
        if (cur == prev1) {
            s.stabilization_time = t - 1;
            s.periodicity = 1;
            return s;
        }
        if (t >= 2 && cur == prev2) {
            s.stabilization_time = t - 2;
            s.periodicity = 2;
            return s;
        }
        if (t >= step_cap) {
            s.stabilization_time = step_cap;
            s.periodicity = 0;
            s.step_cap_hit = true;
            return s;
        }
        std::swap(prev2, prev1);
        std::swap(prev1, cur);
    }
}

namespace {

// Stabilization time only, with preallocated buffers; prev1 holds C_0.
int stabilization_of(const Graph& g, const ModelSpec& model, Config& prev2, Config& prev1,
                     Config& cur, int cap) {
    for (int t = 1;; ++t) {
        step_into(g, model, prev1, cur);
        if (cur == prev1) return t - 1;
        if (t >= 2 && cur == prev2) return t - 2;
        if (t >= cap) return cap;
        std::swap(prev2, prev1);
        std::swap(prev1, cur);
    }
}

}  // namespace

int max_stabilization(const Graph& g, const ModelSpec& model, SweepMode mode, long long samples,
                      std::uint64_t seed) {
    int n = g.node_count();
    int cap = default_step_cap(g);
    Config prev2(n), prev1(n), cur(n);
    int best = 0;
    if (mode == SweepMode::Exhaustive) {
        if (n > 22)
            fail(ErrorKind::CapExceeded,
                 "exhaustive sweep over 2^" + std::to_string(n) + " configurations refused");
        std::uint64_t total = 1ULL << n;
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            prev1.assign_mask(bits);
            best = std::max(best, stabilization_of(g, model, prev2, prev1, cur, cap));
        }
        return best;
    }
    if (samples <= 0) samples = 1024;
    SplitMix64 rng(seed);
    for (long long i = 0; i < samples; ++i) {
        for (int v = 0; v < n; ++v) prev1.set(v, (rng.next() >> 13) & 1u);
        best = std::max(best, stabilization_of(g, model, prev2, prev1, cur, cap));
    }
    return best;
}

PotentialTrace potential_trace(const Graph& g, const Trajectory& t) {
    PotentialTrace out;
    for (const Config& c : t.configs) out.phi.push_back(boundary_size(g, c));
    for (size_t i = 1; i < t.configs.size(); ++i)
        out.new_black.push_back(t.configs[i].count_andnot(t.configs[i - 1]));
    return out;
}

}  // namespace tdl
