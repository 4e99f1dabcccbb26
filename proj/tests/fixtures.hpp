#pragma once
// Small hand-drawn graphs shared across test binaries.

#include <cmath>
#include <utility>
#include <vector>

#include "ifcolor/plane_graph.hpp"

namespace fixtures {

using ifcolor::PlaneGraph;

inline std::pair<double, double> polar(double deg, double r) {
    double a = deg * 3.14159265358979323846 / 180.0;
    return {r * std::cos(a), r * std::sin(a)};
}

// 9-gon rim (ids 0..8), optionally with a hub (id 9) joined to the given rim
// positions; rim is the default outer face
inline PlaneGraph spokes9(const std::vector<int>& hub_att) {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 9; ++i) {
        pts.push_back(polar(40.0 * i + 50.0, 1.0));
        edges.push_back({i, (i + 1) % 9});
    }
    std::vector<int> rim{0, 1, 2, 3, 4, 5, 6, 7, 8};
    if (hub_att.empty()) return ifcolor::build_from_points(pts, edges, &rim);
    pts.push_back({0.0, 0.0});
    for (int a : hub_att) edges.push_back({9, a});
    return ifcolor::build_from_points(pts, edges, &rim);
}

// the worked hub example: hub adjacent to rim 0, 4, 5
inline PlaneGraph hub9() { return spokes9({0, 4, 5}); }

// 9-gon with the chord {0, d}
inline PlaneGraph chord9(int d) {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 9; ++i) {
        pts.push_back(polar(40.0 * i + 50.0, 1.0));
        edges.push_back({i, (i + 1) % 9});
    }
    edges.push_back({0, d});
    std::vector<int> rim{0, 1, 2, 3, 4, 5, 6, 7, 8};
    return ifcolor::build_from_points(pts, edges, &rim);
}

// 9-gon rim with an inner triangle (9,10,11) attached at rim 0, 3, 6
inline PlaneGraph triclaw9() {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 9; ++i) {
        pts.push_back(polar(40.0 * i + 50.0, 1.0));
        edges.push_back({i, (i + 1) % 9});
    }
    for (int j = 0; j < 3; ++j) pts.push_back(polar(40.0 * (3 * j) + 50.0, 0.35));
    edges.push_back({9, 10});
    edges.push_back({10, 11});
    edges.push_back({11, 9});
    edges.push_back({9, 0});
    edges.push_back({10, 3});
    edges.push_back({11, 6});
    std::vector<int> rim{0, 1, 2, 3, 4, 5, 6, 7, 8};
    return ifcolor::build_from_points(pts, edges, &rim);
}

// hexagon 0..5 (all degree 3) with a roof vertex 6 over edge 0-1, wrapped in
// an outer hexagon 7..12 so both inner faces are internal
inline PlaneGraph hexprism_roof() {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) {
        pts.push_back(polar(60.0 * i, 1.0));
        edges.push_back({i, (i + 1) % 6});
    }
    pts.push_back(polar(30.0, 1.7)); // 6: roof
    for (int i = 0; i < 6; ++i) {
        pts.push_back(polar(60.0 * i, 3.0)); // 7..12
        edges.push_back({7 + i, 7 + (i + 1) % 6});
    }
    edges.push_back({6, 0});
    edges.push_back({6, 1});
    edges.push_back({6, 7});
    for (int i = 2; i < 6; ++i) edges.push_back({i, 7 + i});
    std::vector<int> outer{7, 8, 9, 10, 11, 12};
    return ifcolor::build_from_points(pts, edges, &outer);
}

// two triangles joined by a path; corner-to-corner hop distance is d >= 1.
// left triangle 0,1,2; right triangle starts at id 2+d.
inline PlaneGraph two_triangles(int d) {
    std::vector<std::pair<double, double>> pts = {{0, 0}, {-1, 1}, {-1, -1}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 0}};
    int prev = 0;
    for (int i = 1; i < d; ++i) {
        pts.push_back({(double)i, 0});
        edges.push_back({prev, (int)pts.size() - 1});
        prev = (int)pts.size() - 1;
    }
    int r0 = (int)pts.size();
    pts.push_back({(double)d, 0});
    pts.push_back({d + 1.0, 1});
    pts.push_back({d + 1.0, -1});
    edges.push_back({prev, r0});
    edges.push_back({r0, r0 + 1});
    edges.push_back({r0 + 1, r0 + 2});
    edges.push_back({r0 + 2, r0});
    return ifcolor::build_from_points(pts, edges);
}

// K4 drawn with one vertex inside the outer triangle
inline PlaneGraph k4() {
    std::vector<std::pair<double, double>> pts = {{0, 0}, {1, 0}, {0.5, 1}, {0.5, 0.35}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<int> outer{0, 1, 2};
    return ifcolor::build_from_points(pts, edges, &outer);
}

} // namespace fixtures
