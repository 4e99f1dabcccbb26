#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ifcolor/plane_graph.hpp"

namespace ifcolor {

// Text format:
//   n m
//   v: u1 u2 ... uk        (rotation of v, counterclockwise; one line per vertex)
//   outer: v1 v2 ... vd    (optional outer face walk)
// JSON object {"n":..., "rotation":[[...],...], "outer":[...]} is accepted
// interchangeably; the parser sniffs a leading '{'.
PlaneGraph parse_graph(const std::string& text);
PlaneGraph load_graph(const std::string& path);
std::string serialize_graph(const PlaneGraph& G);      // text form
std::string serialize_graph_json(const PlaneGraph& G); // JSON form

// Coloring file: one "v I" or "v F" per line.
std::vector<std::pair<int, char>> parse_coloring_lines(const std::string& text);
std::string read_file(const std::string& path);

} // namespace ifcolor
