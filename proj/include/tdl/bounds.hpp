#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdl/certify.hpp"
#include "tdl/model.hpp"
#include "tdl/rational.hpp"

namespace tdl {

// One catalog entry. 'bound' is the integer a minimum-size (or a stabilization
// time) is compared against: ceil of the formula for lower entries, floor for
// upper ones. Square-root formulas are tightened to that integer exactly via
// integer arithmetic; 'value' then carries the integer and value_exact = false.
// Asymptotic entries (order-of-growth only) are excluded from effective bounds.
struct BoundEntry {
    bool is_upper = false;
    Rat value;
    bool value_exact = true;
    long long bound = 0;
    std::string provenance;
    bool asymptotic = false;
};

struct BoundReport {
    std::string target;
    int parity_x = 0;  // eternal bounds at r = 2: 0 for odd n, 1 for even n
    std::vector<BoundEntry> entries;

    long long lower() const;                 // max over firm lower entries (0 if none)
    std::optional<long long> upper() const;  // min over firm upper entries
};

BoundReport dynamo_bounds(int n, int m, int delta, const ModelSpec& model);
BoundReport monotone_dynamo_bounds(int n, const ModelSpec& model);
BoundReport robust_bounds(int n, const ModelSpec& model);
BoundReport eternal_bounds(int n, const ModelSpec& model);
BoundReport stabilization_bounds(int n, int m, int delta, const ModelSpec& model);

BoundReport bounds_for_role(const Graph& g, const ModelSpec& model, SetRole role);

}  // namespace tdl
