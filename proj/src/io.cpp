#include "tdl/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tdl/errors.hpp"

namespace tdl {

namespace {

using nlohmann::json;

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        fail(ErrorKind::InvalidGraphFile, e.what());
    }
}

}  // namespace

Graph graph_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidGraphFile, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        fail(ErrorKind::InvalidGraphFile, "expected {\"n\": int, \"edges\": [[u, v], ...]}");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(ErrorKind::InvalidGraphFile, "each edge must be a pair of node indices");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return build_graph(j["n"].get<int>(), edges);
}

Graph graph_from_edgelist_text(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u)) continue;  // blank or comment-only line
        std::string rest;
        if (!(fields >> v) || (fields >> rest))
            fail(ErrorKind::InvalidGraphFile,
                 "line " + std::to_string(lineno) + ": expected exactly two node indices");
        if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000)
            fail(ErrorKind::InvalidGraphFile,
                 "line " + std::to_string(lineno) + ": node index out of range");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
    }
    if (edges.empty()) fail(ErrorKind::InvalidGraphFile, "no edges found");
    return build_graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return graph_from_json_text(text);
    return graph_from_edgelist_text(text);
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.node_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump(2);
}

namespace {

json run_to_json(const RunSummary& run) {
    json j;
    j["stabilization_time"] = run.stabilization_time;
    j["periodicity"] = run.periodicity;
    j["step_cap_hit"] = run.step_cap_hit;
    j["reached_all_black"] = run.reached_all_black;
    j["reached_all_white"] = run.reached_all_white;
    j["monotone"] = run.monotone;
    j["min_black"] = run.min_black;
    return j;
}

}  // namespace

std::string trajectory_to_json(const Trajectory& t) {
    json j;
    j["configs"] = json::array();
    for (const Config& c : t.configs) j["configs"].push_back(c.to_string());
    j["stabilization_time"] = t.stabilization_time;
    j["periodicity"] = t.periodicity;
    j["cycle"] = json::array();
    for (const Config& c : t.cycle) j["cycle"].push_back(c.to_string());
    j["step_cap_hit"] = t.step_cap_hit;
    return j.dump(2);
}

std::string certificate_to_json(const Certificate& c) {
    json j;
    j["role"] = to_string(c.role);
    j["witness_set"] = c.witness_set;
    j["verdict"] = c.verdict;
    if (c.violating_node) j["violating_node"] = *c.violating_node;
    if (c.run) j["run"] = run_to_json(*c.run);
    return j.dump(2);
}

std::string solve_result_to_json(const SolveResult& r) {
    json j;
    j["minimum_size"] = r.minimum_size;
    j["witness"] = r.witness;
    j["checked_subsets"] = r.checked_subsets;
    j["bound_seed"] = r.bound_seed;
    return j.dump(2);
}

std::string bound_report_to_json(const BoundReport& r) {
    json j;
    j["target"] = r.target;
    j["parity_x"] = r.parity_x;
    j["entries"] = json::array();
    for (const BoundEntry& e : r.entries) {
        json row;
        row["is_upper"] = e.is_upper;
        row["value"] = e.value.to_string();
        row["value_exact"] = e.value_exact;
        row["bound"] = e.bound;
        row["provenance"] = e.provenance;
        row["asymptotic"] = e.asymptotic;
        j["entries"].push_back(row);
    }
    j["lower"] = r.lower();
    if (auto up = r.upper())
        j["upper"] = *up;
    else
        j["upper"] = nullptr;
    return j.dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::InvalidGraphFile, "cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::InvalidParams, "cannot write file: " + path);
    out << text;
}

}  // namespace tdl
