#include "tdl/model.hpp"

#include "tdl/errors.hpp"

namespace tdl {

namespace {

void check_r(int r) {
    if (r < 1) fail(ErrorKind::InvalidParams, "threshold r must be at least 1");
}

void check_alpha(const Rat& a) {
    if (a <= Rat(0) || a >= Rat(1))
        fail(ErrorKind::InvalidParams, "alpha must satisfy 0 < alpha < 1, got " + a.to_string());
}

}  // namespace

ModelSpec ModelSpec::r_threshold(int r) {
    check_r(r);
    ModelSpec m;
    m.kind = ModelKind::RThreshold;
    m.r = r;
    return m;
}

ModelSpec ModelSpec::r_monotone(int r) {
    check_r(r);
    ModelSpec m;
    m.kind = ModelKind::RMonotone;
    m.r = r;
    return m;
}

ModelSpec ModelSpec::alpha_threshold(const Rat& alpha) {
    check_alpha(alpha);
    ModelSpec m;
    m.kind = ModelKind::AlphaThreshold;
    m.alpha = alpha;
    return m;
}

ModelSpec ModelSpec::alpha_monotone(const Rat& alpha) {
    check_alpha(alpha);
    ModelSpec m;
    m.kind = ModelKind::AlphaMonotone;
    m.alpha = alpha;
    return m;
}

ModelSpec ModelSpec::majority() {
    ModelSpec m;
    m.kind = ModelKind::Majority;
    return m;
}

ModelSpec ModelSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string param = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto need = [&](const std::string& key) {
        if (param.rfind(key + "=", 0) != 0)
            fail(ErrorKind::InvalidParams, "model " + head + " needs " + key + "=..., got '" +
                                               text + "'");
        return param.substr(key.size() + 1);
    };
    if (head == "majority") {
        if (!param.empty()) fail(ErrorKind::InvalidParams, "majority takes no parameters");
        return majority();
    }
    if (head == "rthresh" || head == "rmono") {
        std::string value = need("r");
        size_t used = 0;
        int r = 0;
        try {
            r = std::stoi(value, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidParams, "bad threshold in '" + text + "'");
        }
        if (used != value.size()) fail(ErrorKind::InvalidParams, "bad threshold in '" + text + "'");
        return head == "rthresh" ? r_threshold(r) : r_monotone(r);
    }
    if (head == "athresh" || head == "amono") {
        Rat a = Rat::parse(need("a"));
        return head == "athresh" ? alpha_threshold(a) : alpha_monotone(a);
    }
    fail(ErrorKind::InvalidParams, "unknown model '" + text + "'");
}

std::string ModelSpec::to_string() const {
    switch (kind) {
        case ModelKind::RThreshold: return "rthresh:r=" + std::to_string(r);
        case ModelKind::RMonotone: return "rmono:r=" + std::to_string(r);
        case ModelKind::AlphaThreshold: return "athresh:a=" + alpha.to_string();
        case ModelKind::AlphaMonotone: return "amono:a=" + alpha.to_string();
        case ModelKind::Majority: return "majority";
    }
    return "?";
}

void validate(const Graph& g, const ModelSpec& model) {
    if (!g.is_connected()) fail(ErrorKind::GraphDisconnected, "graph is not connected");
    if (model.uses_r() && model.r > g.min_degree())
        fail(ErrorKind::ThresholdExceedsMinDegree,
             "r = " + std::to_string(model.r) + " exceeds minimum degree " +
                 std::to_string(g.min_degree()));
}

}  // namespace tdl
