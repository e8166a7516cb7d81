#pragma once

#include <string>

#include "tdl/graph.hpp"
#include "tdl/rational.hpp"

namespace tdl {

// The five synchronous update rules. A white node consults only its
// neighborhood; r-threshold turns black on >= r black neighbors, the alpha
// variant on a black fraction >= alpha of its degree (closed inequality,
// compared exactly as q*count >= p*degree), and majority adopts the more
// frequent neighbor color, keeping its own on a tie. The monotone variants
// never let a black node turn white.
enum class ModelKind {
    RThreshold,
    RMonotone,
    AlphaThreshold,
    AlphaMonotone,
    Majority,
};

struct ModelSpec {
    ModelKind kind = ModelKind::Majority;
    int r = 0;    // r-models only
    Rat alpha;    // alpha-models only; reduced p/q with 0 < p/q < 1

    static ModelSpec r_threshold(int r);
    static ModelSpec r_monotone(int r);
    static ModelSpec alpha_threshold(const Rat& alpha);
    static ModelSpec alpha_monotone(const Rat& alpha);
    static ModelSpec majority();

    // Grammar: rthresh:r=2 | rmono:r=2 | athresh:a=1/2 | amono:a=2/3 | majority
    static ModelSpec parse(const std::string& text);
    std::string to_string() const;

    bool uses_r() const { return kind == ModelKind::RThreshold || kind == ModelKind::RMonotone; }
    bool uses_alpha() const {
        return kind == ModelKind::AlphaThreshold || kind == ModelKind::AlphaMonotone;
    }
    bool is_monotone() const {
        return kind == ModelKind::RMonotone || kind == ModelKind::AlphaMonotone;
    }
};

// Standing assumptions for solvers and certifiers: connected graph, and for
// r-models a threshold no larger than the minimum degree.
void validate(const Graph& g, const ModelSpec& model);

}  // namespace tdl
