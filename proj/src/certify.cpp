#include "tdl/certify.hpp"

#include "tdl/errors.hpp"

namespace tdl {

SetRole parse_role(const std::string& text) {
    if (text == "dynamo") return SetRole::Dynamo;
    if (text == "monotone-dynamo") return SetRole::MonotoneDynamo;
    if (text == "robust") return SetRole::Robust;
    if (text == "eternal") return SetRole::Eternal;
    fail(ErrorKind::InvalidParams, "unknown role '" + text + "'");
}

const char* to_string(SetRole role) {
    switch (role) {
        case SetRole::Dynamo: return "dynamo";
        case SetRole::MonotoneDynamo: return "monotone-dynamo";
        case SetRole::Robust: return "robust";
        case SetRole::Eternal: return "eternal";
    }
    return "?";
}

namespace {

Certificate base_certificate(const Graph& g, SetRole role, const std::vector<int>& s,
                             Config& members) {
    members = Config::from_nodes(g.node_count(), s);
    Certificate cert;
    cert.role = role;
    cert.witness_set = members.nodes();
    return cert;
}

}  // namespace

Certificate is_robust(const Graph& g, const ModelSpec& model, const std::vector<int>& s) {
    validate(g, model);
    Config members;
    Certificate cert = base_certificate(g, SetRole::Robust, s, members);
    if (members.none()) fail(ErrorKind::EmptySet, "robustness is defined for non-empty sets");
    if (model.is_monotone()) {
        cert.verdict = true;
        return cert;
    }
    long long p = model.alpha.num;
    long long q = model.alpha.den;
    for (int v : cert.witness_set) {
        int inside = members.count_and(g.neighbor_mask(v));
        bool ok = true;
        switch (model.kind) {
            case ModelKind::RThreshold: ok = inside >= model.r; break;
            case ModelKind::AlphaThreshold: ok = q * inside >= p * g.degree(v); break;
            case ModelKind::Majority: ok = inside >= g.degree(v) - inside; break;
            default: break;
        }
        if (!ok) {
            cert.violating_node = v;
            cert.verdict = false;
            return cert;
        }
    }
    cert.verdict = true;
    return cert;
}

Certificate is_dynamo(const Graph& g, const ModelSpec& model, const std::vector<int>& s) {
    validate(g, model);
    Config members;
    Certificate cert = base_certificate(g, SetRole::Dynamo, s, members);
    RunSummary run = run_summary(g, model, members);
    cert.verdict = run.reached_all_black && !run.step_cap_hit;
    cert.run = run;
    return cert;
}

Certificate is_monotone_dynamo(const Graph& g, const ModelSpec& model, const std::vector<int>& s) {
    validate(g, model);
    Config members;
    Certificate cert = base_certificate(g, SetRole::MonotoneDynamo, s, members);
    RunSummary run = run_summary(g, model, members);
    cert.verdict = run.reached_all_black && run.monotone && !run.step_cap_hit;
    cert.run = run;
    return cert;
}

Certificate is_eternal(const Graph& g, const ModelSpec& model, const std::vector<int>& s) {
    validate(g, model);
    Config members;
    Certificate cert = base_certificate(g, SetRole::Eternal, s, members);
    if (members.none()) fail(ErrorKind::EmptySet, "eternality is defined for non-empty sets");
    RunSummary run = run_summary(g, model, members);
    // All-white is absorbing, so a positive minimum over the finite run up to
    // the cycle decides the infinite behavior.
    cert.verdict = run.min_black >= 1 && !run.step_cap_hit;
    cert.run = run;
    return cert;
}

Certificate certify(const Graph& g, const ModelSpec& model, SetRole role,
                    const std::vector<int>& s) {
    switch (role) {
        case SetRole::Dynamo: return is_dynamo(g, model, s);
        case SetRole::MonotoneDynamo: return is_monotone_dynamo(g, model, s);
        case SetRole::Robust: return is_robust(g, model, s);
        case SetRole::Eternal: return is_eternal(g, model, s);
    }
    fail(ErrorKind::InvalidParams, "unknown role");
}

}  // namespace tdl
