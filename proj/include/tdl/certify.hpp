#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdl/dynamics.hpp"
#include "tdl/graph.hpp"
#include "tdl/model.hpp"

namespace tdl {

enum class SetRole { Dynamo, MonotoneDynamo, Robust, Eternal };

SetRole parse_role(const std::string& text);
const char* to_string(SetRole role);

struct Certificate {
    SetRole role = SetRole::Dynamo;
    std::vector<int> witness_set;
    bool verdict = false;
    std::optional<int> violating_node;  // robust checks, on failure
    std::optional<RunSummary> run;      // simulation-backed checks
};

// Structural check: every member keeps enough support inside the set itself
// (>= r neighbors, >= alpha*degree, or at least half its neighborhood for
// majority). Monotone models make any non-empty set robust.
Certificate is_robust(const Graph& g, const ModelSpec& model, const std::vector<int>& s);

// Simulation from B_0 = s exactly; update monotonicity extends the verdict to
// every configuration containing s. Empty sets are allowed (never dynamos).
Certificate is_dynamo(const Graph& g, const ModelSpec& model, const std::vector<int>& s);

// As is_dynamo, additionally requiring B_t to never shrink along the way.
Certificate is_monotone_dynamo(const Graph& g, const ModelSpec& model, const std::vector<int>& s);

// At least one black node in every round, forever; all-white is absorbing, so
// this is decided on the finite trajectory.
Certificate is_eternal(const Graph& g, const ModelSpec& model, const std::vector<int>& s);

Certificate certify(const Graph& g, const ModelSpec& model, SetRole role,
                    const std::vector<int>& s);

}  // namespace tdl
