#pragma once

#include <string>

#include "tdl/bounds.hpp"
#include "tdl/certify.hpp"
#include "tdl/dynamics.hpp"
#include "tdl/graph.hpp"
#include "tdl/solve.hpp"

namespace tdl {

// Graph JSON: {"n": <int>, "edges": [[u, v], ...]}, 0-indexed, each pair once.
// Edge-list text: one "u v" pair per line, '#' starts a comment, node count
// inferred as max index + 1. Both reject self-loops and duplicate edges.
Graph graph_from_json_text(const std::string& text);
Graph graph_from_edgelist_text(const std::string& text);
Graph read_graph_file(const std::string& path);  // .json by extension, else edge list

std::string graph_to_json(const Graph& g);

std::string trajectory_to_json(const Trajectory& t);
std::string certificate_to_json(const Certificate& c);
std::string solve_result_to_json(const SolveResult& r);
std::string bound_report_to_json(const BoundReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tdl
