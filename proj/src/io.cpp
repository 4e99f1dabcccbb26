#include "ifcolor/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ifcolor {

namespace {

PlaneGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(Errc::PARSE_ERROR, e.what());
    }
    if (!j.contains("n") || !j.contains("rotation"))
        throw GraphError(Errc::PARSE_ERROR, "expected fields n and rotation");
    int n = j["n"].get<int>();
    auto rotation = j["rotation"].get<std::vector<std::vector<int>>>();
    if ((int)rotation.size() != n)
        throw GraphError(Errc::PARSE_ERROR, "rotation size does not match n");
    if (j.contains("outer") && !j["outer"].is_null()) {
        auto outer = j["outer"].get<std::vector<int>>();
        return PlaneGraph::build(std::move(rotation), &outer);
    }
    return PlaneGraph::build(std::move(rotation));
}

PlaneGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::vector<int>> rotation;
    std::vector<int> outer;
    bool have_outer = false;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> GraphError {
        return GraphError(Errc::PARSE_ERROR, "line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (n < 0) {
            try {
                n = std::stoi(first);
            } catch (...) {
                throw fail("expected header 'n m'");
            }
            if (!(ls >> m)) throw fail("expected header 'n m'");
            if (n <= 0) throw fail("n must be positive");
            rotation.assign(n, {});
            continue;
        }
        if (first == "outer:") {
            int v;
            while (ls >> v) outer.push_back(v);
            have_outer = true;
            continue;
        }
        if (first.empty() || first.back() != ':') throw fail("expected 'v:' prefix");
        int v;
        try {
            v = std::stoi(first.substr(0, first.size() - 1));
        } catch (...) {
            throw fail("bad vertex id '" + first + "'");
        }
        if (v < 0 || v >= n) throw fail("vertex id out of range");
        int u;
        while (ls >> u) rotation[v].push_back(u);
    }
    if (n < 0) throw GraphError(Errc::PARSE_ERROR, "empty graph file");
    PlaneGraph G = have_outer ? PlaneGraph::build(std::move(rotation), &outer)
                              : PlaneGraph::build(std::move(rotation));
    if (G.m() != m)
        throw GraphError(Errc::PARSE_ERROR, "header claims " + std::to_string(m) + " edges, found " +
                                                std::to_string(G.m()));
    return G;
}

} // namespace

PlaneGraph parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError(Errc::PARSE_ERROR, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PlaneGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string serialize_graph(const PlaneGraph& G) {
    std::ostringstream out;
    out << G.n() << ' ' << G.m() << '\n';
    for (int v = 0; v < G.n(); ++v) {
        out << v << ':';
        for (int u : G.rotation(v)) out << ' ' << u;
        out << '\n';
    }
    out << "outer:";
    for (int v : G.outer_walk().walk) out << ' ' << v;
    out << '\n';
    return out.str();
}

std::string serialize_graph_json(const PlaneGraph& G) {
    nlohmann::json j;
    j["n"] = G.n();
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < G.n(); ++v) rot.push_back(G.rotation(v));
    j["rotation"] = rot;
    j["outer"] = G.outer_walk().walk;
    return j.dump();
}

std::vector<std::pair<int, char>> parse_coloring_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, char>> out;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        int v;
        std::string col;
        if (!(ls >> v)) continue;
        if (!(ls >> col) || (col != "I" && col != "F"))
            throw GraphError(Errc::PARSE_ERROR,
                             "line " + std::to_string(lineno) + ": expected 'v I' or 'v F'");
        out.emplace_back(v, col[0]);
    }
    return out;
}

} // namespace ifcolor
