// Command line front end: simulate | certify | find | construct | bounds |
// experiment. Exit codes: 0 success, 1 usage, 2 invalid input, 3 cap or
// search budget exceeded. All sampled paths are seeded, and experiment CSVs
// are byte-stable unless --timing asks for real durations.
#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdl/bounds.hpp"
#include "tdl/certify.hpp"
#include "tdl/construct.hpp"
#include "tdl/dynamics.hpp"
#include "tdl/errors.hpp"
#include "tdl/io.hpp"
#include "tdl/model.hpp"
#include "tdl/solve.hpp"

namespace {

using namespace tdl;

std::vector<int> parse_node_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) fail(ErrorKind::InvalidParams, "bad node list entry: " + item);
        out.push_back(v);
    }
    return out;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::InvalidParams, "parameter must look like key=value: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int param_int(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) fail(ErrorKind::InvalidParams, "missing parameter " + key);
    size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size())
        fail(ErrorKind::InvalidParams, "bad integer for " + key + ": " + it->second);
    return v;
}

Rat param_rat(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) fail(ErrorKind::InvalidParams, "missing parameter " + key);
    return Rat::parse(it->second);
}

struct Sweep {
    std::string key;
    int lo = 0;
    int hi = 0;
};

std::optional<Sweep> parse_sweep(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto eq = text.find('=');
    auto dots = text.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
        fail(ErrorKind::InvalidParams, "sweep must look like key=lo..hi: " + text);
    Sweep s;
    s.key = text.substr(0, eq);
    s.lo = std::stoi(text.substr(eq + 1, dots - eq - 1));
    s.hi = std::stoi(text.substr(dots + 2));
    if (s.lo > s.hi) fail(ErrorKind::InvalidParams, "empty sweep range: " + text);
    return s;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_text_file(out_path, text + "\n");
}

std::vector<int> set_from_graph_nodes(const Graph& g, const std::string& init,
                                      const std::string& set_list) {
    if (!init.empty() && !set_list.empty())
        fail(ErrorKind::InvalidParams, "give either --init or --set, not both");
    if (!init.empty()) return Config::parse(init).nodes();
    (void)g;
    return parse_node_list(set_list);
}

// One CSV row; empty cells for fields a suite does not produce.
struct Row {
    std::string family, params, model, target;
    std::string exact, lower, upper, t, p;
    long long ms = 0;
    std::uint64_t seed = 0;
};

std::string csv_of(const std::vector<Row>& rows) {
    std::ostringstream out;
    out << "family,params,model,target,exact,lower,upper,T,p,ms,seed\n";
    for (const Row& r : rows)
        out << r.family << ',' << r.params << ',' << r.model << ',' << r.target << ','
            << r.exact << ',' << r.lower << ',' << r.upper << ',' << r.t << ',' << r.p << ','
            << r.ms << ',' << r.seed << '\n';
    std::string s = out.str();
    s.pop_back();
    return s;
}

class Timer {
public:
    explicit Timer(bool enabled) : enabled_(enabled), start_(clock::now()) {}
    long long ms() const {
        if (!enabled_) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_)
            .count();
    }

private:
    using clock = std::chrono::steady_clock;
    bool enabled_;
    clock::time_point start_;
};

std::string model_csv(const ModelSpec& m) {
    std::string s = m.to_string();
    for (char& c : s)
        if (c == ',') c = ';';
    return s;
}

std::vector<Row> suite_stabilization(const std::optional<Sweep>& sweep, long long samples,
                                     std::uint64_t seed, bool timing) {
    int n_lo = 12, n_hi = 12, r_lo = 1, r_hi = 3;
    if (sweep && sweep->key == "n") n_lo = sweep->lo, n_hi = sweep->hi;
    if (sweep && sweep->key == "r") r_lo = sweep->lo, r_hi = sweep->hi;
    std::vector<Row> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int r = r_lo; r <= r_hi; ++r) {
            if (n < r + 2) continue;
            Timer timer(timing);
            Graph g = make_path_of_cliques(n, r);
            ModelSpec model = ModelSpec::r_monotone(r);
            int worst = n <= 20
                            ? max_stabilization(g, model, SweepMode::Exhaustive)
                            : max_stabilization(g, model, SweepMode::Sampled, samples, seed);
            std::vector<int> canon(r);
            for (int i = 0; i < r; ++i) canon[i] = i;
            RunSummary run = run_summary(g, model, Config::from_nodes(n, canon));
            BoundReport cat = stabilization_bounds(n, g.edge_count(), g.min_degree(), model);
            Row row;
            row.family = "path-of-cliques";
            row.params = "n=" + std::to_string(n) + ";r=" + std::to_string(r);
            row.model = model_csv(model);
            row.target = "stabilization";
            row.exact = std::to_string(worst);
            row.upper = std::to_string(*cat.upper());
            row.t = std::to_string(run.stabilization_time);
            row.p = std::to_string(run.periodicity);
            row.ms = timer.ms();
            row.seed = seed;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<Row> suite_dynamo_bounds(const std::optional<Sweep>& sweep, const ModelSpec& base,
                                     int jobs, std::uint64_t seed, bool timing) {
    int n_lo = 6, n_hi = 9;
    std::vector<int> rs = {base.uses_r() ? base.r : 0};
    if (sweep && sweep->key == "n") n_lo = sweep->lo, n_hi = sweep->hi;
    if (sweep && sweep->key == "r") {
        if (!base.uses_r())
            fail(ErrorKind::InvalidParams, "sweeping r needs an r-threshold or r-monotone model");
        rs.clear();
        for (int r = sweep->lo; r <= sweep->hi; ++r) rs.push_back(r);
    }
    std::vector<Row> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int r : rs) {
            ModelSpec model = base;
            if (base.uses_r()) model.r = r;
            for (const char* family : {"complete", "cycle"}) {
                Timer timer(timing);
                Graph g = family == std::string("complete") ? make_complete(n) : make_cycle(n);
                if (model.uses_r() && model.r > g.min_degree()) continue;
                SolveResult res = min_set(g, model, SetRole::Dynamo, -1, jobs);
                BoundReport cat =
                    dynamo_bounds(g.node_count(), g.edge_count(), g.min_degree(), model);
                Row row;
                row.family = family;
                row.params = "n=" + std::to_string(n);
                row.model = model_csv(model);
                row.target = "dynamo";
                row.exact = std::to_string(res.minimum_size);
                row.lower = std::to_string(cat.lower());
                if (auto up = cat.upper()) row.upper = std::to_string(*up);
                row.ms = timer.ms();
                row.seed = seed;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::vector<Row> suite_robust_eternal(const std::optional<Sweep>& sweep, std::uint64_t seed,
                                      bool timing) {
    int n_lo = 6, n_hi = 10;
    if (sweep && sweep->key == "n") n_lo = sweep->lo, n_hi = sweep->hi;
    std::vector<std::pair<std::string, Graph>> instances;
    for (int n = n_lo; n <= n_hi; ++n) {
        instances.push_back({"cycle;n=" + std::to_string(n), make_cycle(n)});
        instances.push_back({"complete;n=" + std::to_string(n), make_complete(n)});
    }
    instances.push_back({"torus;length=3;dim=2", make_torus(3, 2)});
    instances.push_back({"torus;length=4;dim=2", make_torus(4, 2)});
    std::vector<Row> rows;
    for (const auto& [label, g] : instances) {
        auto semi = label.find(';');
        std::string family = label.substr(0, semi);
        std::string params = label.substr(semi + 1);
        {
            Timer timer(timing);
            ModelSpec model = ModelSpec::alpha_threshold(Rat(1, 3));
            std::vector<int> set = robust_via_partition(g, Rat(1, 3));
            Certificate cert = is_robust(g, model, set);
            BoundReport cat = robust_bounds(g.node_count(), model);
            Row row;
            row.family = family;
            row.params = params;
            row.model = model_csv(model);
            row.target = "robust";
            row.exact = cert.verdict ? std::to_string(set.size()) : "-1";
            row.lower = std::to_string(cat.lower());
            row.upper = std::to_string(*cat.upper());
            row.ms = timer.ms();
            row.seed = seed;
            rows.push_back(row);
        }
        {
            Timer timer(timing);
            ModelSpec model = ModelSpec::majority();
            std::vector<int> set = robust_via_bipartition_majority(g);
            Certificate cert = is_robust(g, model, set);
            BoundReport cat = robust_bounds(g.node_count(), model);
            Row row;
            row.family = family;
            row.params = params;
            row.model = model_csv(model);
            row.target = "robust";
            row.exact = cert.verdict ? std::to_string(set.size()) : "-1";
            row.lower = std::to_string(cat.lower());
            row.upper = std::to_string(*cat.upper());
            row.ms = timer.ms();
            row.seed = seed;
            rows.push_back(row);
        }
        if (g.node_count() % 2 == 0 && g.min_degree() >= 2) {
            Timer timer(timing);
            ModelSpec model = ModelSpec::r_threshold(2);
            std::vector<int> set = eternal_r2_construct(g);
            Certificate cert = is_eternal(g, model, set);
            BoundReport cat = eternal_bounds(g.node_count(), model);
            Row row;
            row.family = family;
            row.params = params;
            row.model = model_csv(model);
            row.target = "eternal";
            row.exact = cert.verdict ? std::to_string(set.size()) : "-1";
            row.lower = std::to_string(cat.lower());
            row.upper = std::to_string(*cat.upper());
            row.ms = timer.ms();
            row.seed = seed;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<Row> suite_dense_dynamos(const std::optional<Sweep>& sweep, const ModelSpec& base,
                                     std::uint64_t seed, bool timing) {
    int r = base.uses_r() ? base.r : 2;
    int n_lo = 2 * r + 2, n_hi = 2 * r + 2 + 4;
    if (sweep && sweep->key == "n") n_lo = sweep->lo, n_hi = sweep->hi;
    if (sweep && sweep->key == "r")
        fail(ErrorKind::InvalidParams, "this suite sweeps n; set r through --model");
    std::vector<Row> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        std::vector<std::pair<std::string, Graph>> instances;
        instances.push_back({"complete", make_complete(n)});
        // Minus a perfect matching: the sparsest dense-guarantee case we build.
        if (n % 2 == 0 && n >= 2 * r + 4 && n - 2 >= 2)
            instances.push_back({"complete-minus-matching", make_circulant_regular(n, n - 2)});
        for (const auto& [family, g] : instances) {
            Timer timer(timing);
            DenseDynamoReport rep = verify_dense_dynamos(g, r);
            Row row;
            row.family = family;
            row.params = "n=" + std::to_string(n) + ";r=" + std::to_string(r);
            row.model = model_csv(ModelSpec::r_threshold(r));
            row.target = "dense-dynamos";
            row.exact = std::to_string(rep.count);
            row.lower = std::to_string(rep.total_sets);
            row.upper = std::to_string(rep.total_sets);
            row.ms = timer.ms();
            row.seed = seed;
            rows.push_back(row);
        }
    }
    return rows;
}

int run(int argc, char** argv) {
    CLI::App app{"threshold dynamics lab: dynamos, robust and eternal sets, bounds"};
    app.require_subcommand(1);

    std::string graph_path, model_text, role_text, init_text, set_text, out_path;
    std::string family, params_text, base_path, suite, sweep_text;
    int steps = 0, size_cap = -1, jobs = 1;
    long long samples = 0;
    std::uint64_t seed = 0;
    bool timing = false;

    auto* sim = app.add_subcommand("simulate", "run the dynamics and print the trajectory");
    sim->add_option("--graph", graph_path, "graph file (.json or edge list)")->required();
    sim->add_option("--model", model_text, "rthresh:r=2 | rmono:r=2 | athresh:a=1/2 | "
                                           "amono:a=2/3 | majority")
        ->required();
    sim->add_option("--init", init_text, "initial configuration as a 0/1 string");
    sim->add_option("--set", set_text, "initially black nodes, comma separated");
    sim->add_option("--steps", steps, "step cap (default 4m + 2n + 4)");
    sim->add_option("--out", out_path, "write the JSON here instead of stdout");

    auto* cert = app.add_subcommand("certify", "check a set for a role");
    cert->add_option("--graph", graph_path, "graph file")->required();
    cert->add_option("--model", model_text, "model spec")->required();
    cert->add_option("--role", role_text, "dynamo | monotone-dynamo | robust | eternal")
        ->required();
    cert->add_option("--set", set_text, "node set, comma separated");
    cert->add_option("--out", out_path, "write the JSON here instead of stdout");

    auto* find = app.add_subcommand("find", "exact minimum-size set for a role");
    find->add_option("--graph", graph_path, "graph file")->required();
    find->add_option("--model", model_text, "model spec")->required();
    find->add_option("--role", role_text, "dynamo | monotone-dynamo | robust | eternal")
        ->required();
    find->add_option("--size-cap", size_cap, "largest size to try (default n)");
    find->add_option("--jobs", jobs, "worker threads for the subset scan");
    find->add_option("--out", out_path, "write the JSON here instead of stdout");

    auto* cons = app.add_subcommand("construct", "build a named graph or witness set");
    cons->add_option("--family", family,
                     "complete | cycle | star | complete-bipartite | path-of-cliques | "
                     "clique-with-leaves | torus | double | eternal-tightness | circulant | "
                     "robust-partition | robust-bipartition | eternal-cycle")
        ->required();
    cons->add_option("--params", params_text, "comma separated key=value list");
    cons->add_option("--base", base_path, "input graph for double and the witness builders");
    cons->add_option("--out", out_path, "write the JSON here instead of stdout");

    auto* bnd = app.add_subcommand("bounds", "catalog bounds for a role on a graph");
    bnd->add_option("--graph", graph_path, "graph file")->required();
    bnd->add_option("--model", model_text, "model spec")->required();
    bnd->add_option("--role", role_text,
                    "dynamo | monotone-dynamo | robust | eternal | stabilization")
        ->required();
    bnd->add_option("--out", out_path, "write the JSON here instead of stdout");

    auto* exp = app.add_subcommand("experiment", "run a suite and emit CSV");
    exp->add_option("--suite", suite,
                    "stabilization | dynamo-bounds | robust-eternal | dense-dynamos")
        ->required();
    exp->add_option("--model", model_text, "model spec (suite specific default)");
    exp->add_option("--sweep", sweep_text, "key=lo..hi, key is n or the model's r");
    exp->add_option("--jobs", jobs, "worker threads for subset scans");
    exp->add_option("--samples", samples, "sample count for sampled sweeps");
    exp->add_option("--seed", seed, "seed for sampled sweeps");
    exp->add_flag("--timing", timing, "fill the ms column with real durations");
    exp->add_option("--out", out_path, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) {
            Graph g = read_graph_file(graph_path);
            ModelSpec model = ModelSpec::parse(model_text);
            validate(g, model);
            Config c0 = init_text.empty() && set_text.empty()
                            ? Config(g.node_count())
                            : Config::from_nodes(
                                  g.node_count(),
                                  set_from_graph_nodes(g, init_text, set_text));
            if (!init_text.empty()) c0 = Config::parse(init_text);
            if (c0.size() != g.node_count())
                fail(ErrorKind::DimensionMismatch, "initial configuration size differs");
            Trajectory t = simulate(g, model, c0, steps);
            emit(out_path, trajectory_to_json(t));
            return t.step_cap_hit ? 3 : 0;
        }
        if (cert->parsed()) {
            Graph g = read_graph_file(graph_path);
            ModelSpec model = ModelSpec::parse(model_text);
            Certificate c = certify(g, model, parse_role(role_text), parse_node_list(set_text));
            emit(out_path, certificate_to_json(c));
            return 0;
        }
        if (find->parsed()) {
            Graph g = read_graph_file(graph_path);
            ModelSpec model = ModelSpec::parse(model_text);
            SolveResult res = min_set(g, model, parse_role(role_text), size_cap, jobs);
            emit(out_path, solve_result_to_json(res));
            return 0;
        }
        if (cons->parsed()) {
            auto params = parse_params(params_text);
            auto need_base = [&]() {
                if (base_path.empty())
                    fail(ErrorKind::InvalidParams, "this family needs --base GRAPH");
                return read_graph_file(base_path);
            };
            auto set_json = [](const std::vector<int>& nodes) {
                std::string s = "{\n  \"size\": " + std::to_string(nodes.size()) +
                                ",\n  \"nodes\": [";
                for (size_t i = 0; i < nodes.size(); ++i)
                    s += (i ? ", " : "") + std::to_string(nodes[i]);
                return s + "]\n}";
            };
            if (family == "complete")
                emit(out_path, graph_to_json(make_complete(param_int(params, "n"))));
            else if (family == "cycle")
                emit(out_path, graph_to_json(make_cycle(param_int(params, "n"))));
            else if (family == "star")
                emit(out_path, graph_to_json(make_star(param_int(params, "n"))));
            else if (family == "complete-bipartite")
                emit(out_path, graph_to_json(make_complete_bipartite(param_int(params, "a"),
                                                                     param_int(params, "b"))));
            else if (family == "path-of-cliques")
                emit(out_path, graph_to_json(make_path_of_cliques(param_int(params, "n"),
                                                                  param_int(params, "r"))));
            else if (family == "clique-with-leaves")
                emit(out_path, graph_to_json(make_clique_with_leaves(param_int(params, "n"),
                                                                     param_rat(params, "a"))));
            else if (family == "torus")
                emit(out_path, graph_to_json(make_torus(param_int(params, "length"),
                                                        param_int(params, "dim"))));
            else if (family == "double")
                emit(out_path, graph_to_json(make_bipartite_double(need_base())));
            else if (family == "eternal-tightness")
                emit(out_path, graph_to_json(make_eternal_tightness(param_int(params, "n"),
                                                                    param_int(params, "r"))));
            else if (family == "circulant")
                emit(out_path, graph_to_json(make_circulant_regular(param_int(params, "l"),
                                                                    param_int(params, "r"))));
            else if (family == "robust-partition")
                emit(out_path,
                     set_json(robust_via_partition(need_base(), param_rat(params, "a"))));
            else if (family == "robust-bipartition")
                emit(out_path, set_json(robust_via_bipartition_majority(need_base())));
            else if (family == "eternal-cycle")
                emit(out_path, set_json(eternal_r2_construct(need_base())));
            else
                fail(ErrorKind::InvalidParams, "unknown family: " + family);
            return 0;
        }
        if (bnd->parsed()) {
            Graph g = read_graph_file(graph_path);
            ModelSpec model = ModelSpec::parse(model_text);
            BoundReport rep =
                role_text == "stabilization"
                    ? stabilization_bounds(g.node_count(), g.edge_count(), g.min_degree(),
                                           model)
                    : bounds_for_role(g, model, parse_role(role_text));
            emit(out_path, bound_report_to_json(rep));
            return 0;
        }
        if (exp->parsed()) {
            auto sweep = parse_sweep(sweep_text);
            ModelSpec model = model_text.empty() ? ModelSpec::r_threshold(2)
                                                 : ModelSpec::parse(model_text);
            std::vector<Row> rows;
            if (suite == "stabilization")
                rows = suite_stabilization(sweep, samples, seed, timing);
            else if (suite == "dynamo-bounds")
                rows = suite_dynamo_bounds(sweep, model, jobs, seed, timing);
            else if (suite == "robust-eternal")
                rows = suite_robust_eternal(sweep, seed, timing);
            else if (suite == "dense-dynamos")
                rows = suite_dense_dynamos(sweep, model, seed, timing);
            else
                fail(ErrorKind::InvalidParams, "unknown suite: " + suite);
            emit(out_path, csv_of(rows));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::CapExceeded:
            case ErrorKind::NoSolution: return 3;
            default: return 2;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
