#pragma once

#include <cstdint>
#include <vector>

#include "tdl/config.hpp"
#include "tdl/graph.hpp"
#include "tdl/model.hpp"

namespace tdl {

// Every trajectory of the five models ends in a fixed point or a 2-cycle, so
// cycle detection only compares against the two previous configurations. The
// step cap is a safety net: it is far above the linear-in-m stabilization
// guarantees, and hitting it is reported loudly instead of looping.
struct Trajectory {
    std::vector<Config> configs;   // C_0 .. C_{T+p-1}
    int stabilization_time = 0;    // T: first index on the cycle
    int periodicity = 0;           // p in {1,2}; 0 when the cap was hit
    std::vector<Config> cycle;     // the p cycle configurations
    bool step_cap_hit = false;
};

// Online summary of a run; same semantics as Trajectory without the history.
struct RunSummary {
    int stabilization_time = 0;
    int periodicity = 0;
    bool step_cap_hit = false;
    bool reached_all_black = false;
    bool reached_all_white = false;
    bool monotone = true;  // B_t subset of B_{t+1} at every step taken
    int min_black = 0;     // over all configurations seen
};

struct PotentialTrace {
    std::vector<int> phi;        // |boundary(B_t)| per recorded configuration
    std::vector<int> new_black;  // |B_t \ B_{t-1}| per step
};

int default_step_cap(const Graph& g);  // 4m + 2n + 4

Config step(const Graph& g, const ModelSpec& model, const Config& c);
void step_into(const Graph& g, const ModelSpec& model, const Config& c, Config& out);

// step_cap = 0 picks the default cap.
Trajectory simulate(const Graph& g, const ModelSpec& model, const Config& c0, int step_cap = 0);
RunSummary run_summary(const Graph& g, const ModelSpec& model, const Config& c0, int step_cap = 0);

enum class SweepMode { Exhaustive, Sampled };

// Maximum stabilization time T over initial configurations: all 2^n of them
// (requires n <= 22) or a seeded sample.
int max_stabilization(const Graph& g, const ModelSpec& model, SweepMode mode,
                      long long samples = 0, std::uint64_t seed = 0);

PotentialTrace potential_trace(const Graph& g, const Trajectory& t);

}  // namespace tdl
