#include "tdl/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "tdl/errors.hpp"

namespace tdl {

long long BoundReport::lower() const {
    long long best = 0;
    for (const auto& e : entries)
        if (!e.is_upper && !e.asymptotic) best = std::max(best, e.bound);
    return best;
}

std::optional<long long> BoundReport::upper() const {
    std::optional<long long> best;
    for (const auto& e : entries)
        if (e.is_upper && !e.asymptotic)
            best = best ? std::min(*best, e.bound) : e.bound;
    return best;
}

namespace {

BoundEntry lower_of(const Rat& value, std::string prov) {
    return BoundEntry{false, value, true, value.ceil_int(), std::move(prov), false};
}

BoundEntry upper_of(const Rat& value, std::string prov) {
    return BoundEntry{true, value, true, value.floor_int(), std::move(prov), false};
}

// Least integer k >= 0 with (k+1)^2 * scale >= target; the integer form of the
// square-root lower bounds, so no floating point decides a bound.
BoundEntry tight_lower(long long scale, long long target, std::string prov) {
    long long t = 1;
    if (scale > 0 && target > 0) {
        t = static_cast<long long>(std::sqrt(static_cast<double>(target) / scale));
        if (t < 1) t = 1;
        while (t > 1 && static_cast<__int128>(t - 1) * (t - 1) * scale >= target) --t;
        while (static_cast<__int128>(t) * t * scale < target) ++t;
    }
    return BoundEntry{false, Rat(t - 1), false, t - 1, std::move(prov), false};
}

BoundEntry asymptotic_upper(const Rat& value, std::string prov) {
    return BoundEntry{true, value, true, value.floor_int(), std::move(prov), true};
}

}  // namespace

BoundReport dynamo_bounds(int n, int m, int delta, const ModelSpec& model) {
    (void)delta;
    BoundReport rep;
    rep.target = "dynamo";
    long long p = model.alpha.num;
    long long q = model.alpha.den;
    switch (model.kind) {
        case ModelKind::RThreshold:
            if (model.r == 1) {
                rep.entries.push_back(lower_of(1, "some node must start black"));
                rep.entries.push_back(
                    upper_of(2, "two adjacent black nodes keep each other black and spread"));
            } else {
                rep.entries.push_back(
                    lower_of(model.r, "fewer than r black nodes can never flip anyone"));
                rep.entries.push_back(lower_of(
                    Rat(2LL * (static_cast<long long>(n) * model.r - m), model.r),
                    "edge-counting bound 2(n - m/r)"));
                rep.entries.push_back(upper_of(n, "full node set"));
            }
            break;
        case ModelKind::RMonotone:
            rep.entries.push_back(
                lower_of(model.r, "fewer than r black nodes can never flip anyone"));
            rep.entries.push_back(
                lower_of(Rat(static_cast<long long>(n) * model.r - m, model.r),
                         "edge-counting bound n - m/r"));
            rep.entries.push_back(
                upper_of(Rat(static_cast<long long>(n) * model.r, model.r + 1),
                         "a seed of r/(r+1) of the nodes always suffices"));
            break;
        case ModelKind::AlphaThreshold:
            rep.entries.push_back(lower_of(1, "some node must start black"));
            if (model.alpha > Rat(3, 4))
                rep.entries.push_back(tight_lower(
                    q * q, 4 * p * p * n,
                    "least k with (k+1)^2 q^2 >= 4 p^2 n, the integer form of 2a*sqrt(n) - 1"));
            rep.entries.push_back(upper_of(n, "full node set"));
            break;
        case ModelKind::AlphaMonotone:
            rep.entries.push_back(lower_of(1, "some node must start black"));
            rep.entries.push_back(upper_of(Rat(2 * p * n, q),
                                           "a seed of 2a of the nodes always suffices"));
            break;
        case ModelKind::Majority:
            rep.entries.push_back(lower_of(1, "some node must start black"));
            rep.entries.push_back(upper_of(n, "full node set"));
            break;
    }
    return rep;
}

BoundReport monotone_dynamo_bounds(int n, const ModelSpec& model) {
    BoundReport rep;
    rep.target = "monotone-dynamo";
    long long p = model.alpha.num;
    long long q = model.alpha.den;
    switch (model.kind) {
        case ModelKind::RThreshold:
            if (model.r == 1) {
                rep.entries.push_back(
                    lower_of(2, "a lone black node loses itself in the first step"));
                rep.entries.push_back(
                    upper_of(2, "two adjacent black nodes never shrink and spread"));
            } else {
                rep.entries.push_back(lower_of(
                    model.r + 1, "the seed must hold a node with r seed neighbors"));
                rep.entries.push_back(upper_of(n, "full node set"));
            }
            break;
        case ModelKind::RMonotone:
            rep.entries.push_back(
                lower_of(model.r, "fewer than r black nodes can never flip anyone"));
            rep.entries.push_back(
                upper_of(Rat(static_cast<long long>(n) * model.r, model.r + 1),
                         "a seed of r/(r+1) of the nodes always suffices"));
            break;
        case ModelKind::AlphaThreshold:
            rep.entries.push_back(lower_of(n >= 2 ? 2 : 1,
                                           "a lone black node loses itself in the first step"));
            if (model.alpha > Rat(1, 2))
                rep.entries.push_back(tight_lower(
                    q - p, p * n,
                    "least k with (k+1)^2 (q-p) >= p n, the integer form of sqrt(an/(1-a)) - 1"));
            rep.entries.push_back(upper_of(n, "full node set"));
            break;
        case ModelKind::AlphaMonotone:
            rep.entries.push_back(lower_of(1, "some node must start black"));
            rep.entries.push_back(upper_of(Rat(2 * p * n, q),
                                           "a seed of 2a of the nodes always suffices"));
            break;
        case ModelKind::Majority:
            rep.entries.push_back(tight_lower(
                1, n, "least k with (k+1)^2 >= n, the integer form of sqrt(n) - 1"));
            rep.entries.push_back(upper_of(n, "full node set"));
            break;
    }
    return rep;
}

BoundReport robust_bounds(int n, const ModelSpec& model) {
    BoundReport rep;
    rep.target = "robust";
    long long p = model.alpha.num;
    long long q = model.alpha.den;
    switch (model.kind) {
        case ModelKind::RMonotone:
        case ModelKind::AlphaMonotone:
            rep.entries.push_back(lower_of(1, "non-empty is required"));
            rep.entries.push_back(upper_of(1, "a black node never turns white"));
            break;
        case ModelKind::RThreshold:
            if (model.r == 1) {
                rep.entries.push_back(lower_of(2, "each member needs a member neighbor"));
                rep.entries.push_back(upper_of(2, "two adjacent nodes support each other"));
            } else {
                rep.entries.push_back(
                    lower_of(model.r + 1, "members need r member neighbors each"));
                rep.entries.push_back(upper_of(n, "full node set"));
            }
            break;
        case ModelKind::AlphaThreshold:
            rep.entries.push_back(lower_of(
                Rat(q, q - p), "each member needs an alpha share of its neighbors inside"));
            if (model.alpha <= Rat(1, 2))
                rep.entries.push_back(upper_of(Rat(2 * p * p * n + q * q, p * q),
                                               "partition refinement yields 2an + 1/a"));
            else
                rep.entries.push_back(upper_of(n, "full node set"));
            break;
        case ModelKind::Majority:
            rep.entries.push_back(lower_of(n >= 2 ? 2 : 1,
                                           "a member needs at least half its neighbors inside"));
            rep.entries.push_back(
                upper_of(n / 2 + 1, "the denser side of a tuned bipartition suffices"));
            break;
    }
    return rep;
}

BoundReport eternal_bounds(int n, const ModelSpec& model) {
    BoundReport rep;
    rep.target = "eternal";
    long long p = model.alpha.num;
    long long q = model.alpha.den;
    switch (model.kind) {
        case ModelKind::RMonotone:
        case ModelKind::AlphaMonotone:
            rep.entries.push_back(lower_of(1, "non-empty is required"));
            rep.entries.push_back(upper_of(1, "a black node never turns white"));
            break;
        case ModelKind::RThreshold:
            if (model.r == 1) {
                rep.entries.push_back(lower_of(1, "non-empty is required"));
                rep.entries.push_back(
                    upper_of(1, "one black node always recruits its neighborhood"));
            } else if (model.r == 2) {
                rep.parity_x = n % 2 == 0 ? 1 : 0;
                rep.entries.push_back(lower_of(2, "a lone black node dies in one step"));
                if (n % 2 == 0)
                    rep.entries.push_back(
                        upper_of(n / 2, "alternate nodes of a spanning structure suffice"));
                else
                    rep.entries.push_back(upper_of(n, "full node set"));
            } else {
                rep.entries.push_back(
                    lower_of(model.r, "fewer than r black nodes die in one step"));
                rep.entries.push_back(upper_of(n, "full node set"));
            }
            break;
        case ModelKind::AlphaThreshold:
            rep.entries.push_back(lower_of(1, "non-empty is required"));
            if (model.alpha <= Rat(1, 2))
                rep.entries.push_back(upper_of(Rat(2 * p * p * n + q * q, p * q),
                                               "a robust set of size 2an + 1/a exists"));
            else
                rep.entries.push_back(upper_of(n, "full node set"));
            break;
        case ModelKind::Majority:
            rep.entries.push_back(lower_of(1, "non-empty is required"));
            rep.entries.push_back(
                upper_of(n / 2 + 1, "a robust majority-side set of that size exists"));
            break;
    }
    return rep;
}

BoundReport stabilization_bounds(int n, int m, int delta, const ModelSpec& model) {
    BoundReport rep;
    rep.target = "stabilization";
    switch (model.kind) {
        case ModelKind::RMonotone:
            rep.entries.push_back(upper_of(
                n - model.r, "growth adds a node per step once at least r are black"));
            if (delta >= 1)
                rep.entries.push_back(upper_of(
                    Rat(18LL * model.r * n, delta), "strict bound 18rn/delta"));
            break;
        case ModelKind::AlphaMonotone:
            rep.entries.push_back(
                upper_of(n - 1, "monotone growth from a non-empty seed"));
            break;
        case ModelKind::RThreshold:
        case ModelKind::AlphaThreshold:
        case ModelKind::Majority:
            rep.entries.push_back(asymptotic_upper(
                m, "stabilization is linear in the edge count, order of growth only"));
            rep.entries.push_back(upper_of(
                4LL * m + 2LL * n + 4, "every trajectory closes into a fixed point or 2-cycle "
                                       "within the potential-argument cap"));
            break;
    }
    return rep;
}

BoundReport bounds_for_role(const Graph& g, const ModelSpec& model, SetRole role) {
    switch (role) {
        case SetRole::Dynamo:
            return dynamo_bounds(g.node_count(), g.edge_count(), g.min_degree(), model);
        case SetRole::MonotoneDynamo: return monotone_dynamo_bounds(g.node_count(), model);
        case SetRole::Robust: return robust_bounds(g.node_count(), model);
        case SetRole::Eternal: return eternal_bounds(g.node_count(), model);
    }
    fail(ErrorKind::InvalidParams, "unknown role");
}

}  // namespace tdl
