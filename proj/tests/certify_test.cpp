#include <string>
#include <vector>

#include "tdl/certify.hpp"
#include "tdl/construct.hpp"
#include "tdl/graph.hpp"
#include "tdl/model.hpp"

#include "support/fixtures.hpp"
#include "support/harness.hpp"
#include "support/reference.hpp"

using namespace tdl;

namespace {

std::vector<int> mask_nodes(int n, std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) out.push_back(v);
    return out;
}

// Support deficit of one member, by the structural rule of each model.
bool violates_structurally(const ref::Adj& adj, const ModelSpec& m, const ref::Colors& s,
                           int v) {
    long long inside = 0;
    for (int u : adj[static_cast<size_t>(v)])
        if (s[static_cast<size_t>(u)]) ++inside;
    long long deg = static_cast<long long>(adj[static_cast<size_t>(v)].size());
    switch (m.kind) {
        case ModelKind::RThreshold: return inside < m.r;
        case ModelKind::AlphaThreshold: return m.alpha.den * inside < m.alpha.num * deg;
        case ModelKind::Majority: return inside < deg - inside;
        default: return false;
    }
}

std::vector<ModelSpec> sweep_models(const Graph& g) {
    std::vector<ModelSpec> out = {
        ModelSpec::alpha_threshold(Rat(1, 2)), ModelSpec::alpha_threshold(Rat(2, 3)),
        ModelSpec::alpha_monotone(Rat(1, 3)), ModelSpec::majority()};
    for (int r = 1; r <= 2; ++r) {
        if (r > g.min_degree()) break;
        out.push_back(ModelSpec::r_threshold(r));
        out.push_back(ModelSpec::r_monotone(r));
    }
    return out;
}

void role_parse_roundtrip() {
    for (SetRole role : {SetRole::Dynamo, SetRole::MonotoneDynamo, SetRole::Robust,
                         SetRole::Eternal}) {
        CHECK(parse_role(to_string(role)) == role);
    }
    CHECK(parse_role("dynamo") == SetRole::Dynamo);
    CHECK(parse_role("monotone-dynamo") == SetRole::MonotoneDynamo);
    CHECK(parse_role("robust") == SetRole::Robust);
    CHECK(parse_role("eternal") == SetRole::Eternal);
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, parse_role("dynamos"));
    CHECK_THROWS_KIND(ErrorKind::InvalidParams, parse_role(""));
}

void empty_and_invalid_inputs() {
    Graph g = make_cycle(6);
    ModelSpec m = ModelSpec::r_threshold(2);
    CHECK_THROWS_KIND(ErrorKind::EmptySet, is_robust(g, m, {}));
    CHECK_THROWS_KIND(ErrorKind::EmptySet, is_eternal(g, m, {}));
    CHECK(!is_dynamo(g, m, {}).verdict);
    CHECK(!is_monotone_dynamo(g, m, {}).verdict);
    CHECK_THROWS_KIND(ErrorKind::InvalidNode, is_dynamo(g, m, {6}));
    CHECK_THROWS_KIND(ErrorKind::InvalidNode, is_dynamo(g, m, {-1}));

    Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_KIND(ErrorKind::GraphDisconnected,
                      is_dynamo(split, ModelSpec::majority(), {0}));
    CHECK_THROWS_KIND(ErrorKind::ThresholdExceedsMinDegree,
                      is_eternal(make_star(5), ModelSpec::r_threshold(2), {0}));
}

void witness_is_canonicalized() {
    Graph g = make_complete(5);
    Certificate cert = is_dynamo(g, ModelSpec::r_threshold(1), {3, 1, 2, 1});
    CHECK((cert.witness_set == std::vector<int>{1, 2, 3}));
    CHECK(cert.verdict);
}

void agrees_with_reference() {
    for (const auto& inst : fixtures::family_instances(6)) {
        const Graph& g = inst.graph;
        int n = g.node_count();
        ref::Adj adj = ref::adjacency_of(g);
        for (const ModelSpec& m : sweep_models(g)) {
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<int> s = mask_nodes(n, mask);
                ref::Colors colors = ref::colors_from_mask(n, mask);
                std::string tag =
                    inst.name + " " + m.to_string() + " mask=" + std::to_string(mask);
                CHECK_MSG(is_dynamo(g, m, s).verdict == ref::is_dynamo(adj, m, colors), tag);
                CHECK_MSG(is_monotone_dynamo(g, m, s).verdict ==
                              ref::is_monotone_dynamo(adj, m, colors),
                          tag);
                if (mask == 0) continue;
                CHECK_MSG(is_eternal(g, m, s).verdict == ref::is_eternal(adj, m, colors),
                          tag);
                Certificate rob = is_robust(g, m, s);
                CHECK_MSG(rob.verdict == ref::is_robust(adj, m, colors), tag);
                if (rob.verdict) {
                    CHECK_MSG(!rob.violating_node.has_value(), tag);
                } else {
                    CHECK_MSG(rob.violating_node.has_value(), tag);
                    if (rob.violating_node) {
                        int v = *rob.violating_node;
                        CHECK_MSG(violates_structurally(adj, m, colors, v), tag);
                        // First failing member in witness order.
                        for (int u : s) {
                            if (u == v) break;
                            CHECK_MSG(!violates_structurally(adj, m, colors, u), tag);
                        }
                    }
                }
            }
        }
    }
}

void monotone_models_make_everything_robust() {
    Graph g = make_star(7);
    CHECK(is_robust(g, ModelSpec::alpha_monotone(Rat(3, 4)), {4}).verdict);
    CHECK(is_robust(g, ModelSpec::r_monotone(1), {0}).verdict);
}

void certificate_contents() {
    Graph g = make_cycle(6);
    ModelSpec m = ModelSpec::r_threshold(2);

    Certificate dyn = certify(g, m, SetRole::Dynamo, {0, 1, 2, 3, 4, 5});
    CHECK(dyn.role == SetRole::Dynamo);
    CHECK(dyn.verdict);
    CHECK(dyn.run.has_value());
    if (dyn.run) CHECK(dyn.run->reached_all_black);

    Certificate ete = certify(g, m, SetRole::Eternal, {0, 2, 4});
    CHECK(ete.verdict);
    CHECK(ete.run.has_value());
    if (ete.run) CHECK_EQ(ete.run->min_black, 3);

    Certificate rob = certify(g, m, SetRole::Robust, {0, 2, 4});
    CHECK(!rob.verdict);
    CHECK(!rob.run.has_value());
    CHECK(rob.violating_node.has_value());
    if (rob.violating_node) CHECK_EQ(*rob.violating_node, 0);

    Certificate mono = certify(g, ModelSpec::r_monotone(2), SetRole::MonotoneDynamo,
                               {0, 1, 2, 3});
    CHECK(mono.verdict == is_monotone_dynamo(g, ModelSpec::r_monotone(2),
                                             {0, 1, 2, 3}).verdict);
}

void robust_sets_never_die() {
    // A robust set stays black pointwise, so its runs are eternal.
    Graph g = make_complete(7);
    ModelSpec m = ModelSpec::alpha_threshold(Rat(1, 2));
    std::vector<int> s = {0, 1, 2, 3};
    CHECK(is_robust(g, m, s).verdict);
    CHECK(is_eternal(g, m, s).verdict);
}

}  // namespace

int main() {
    RUN_TEST(role_parse_roundtrip);
    RUN_TEST(empty_and_invalid_inputs);
    RUN_TEST(witness_is_canonicalized);
    RUN_TEST(agrees_with_reference);
    RUN_TEST(monotone_models_make_everything_robust);
    RUN_TEST(certificate_contents);
    RUN_TEST(robust_sets_never_die);
    return harness::summary("certify_test");
}
