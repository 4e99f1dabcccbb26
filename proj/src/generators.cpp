#include "ifcolor/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ifcolor/reducibility.hpp"
#include "ifcolor/structures.hpp"

namespace ifcolor {

namespace {

int pick(std::mt19937_64& rng, int m) { return (int)(rng() % (std::uint64_t)m); }

bool has_edge(const PlaneBuilder& b, int u, int v) {
    const auto& r = b.rotation()[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

// One random growth step inside a random inner face: a chord, a pendant path
// or a splitting path. Steps that would break the embedding (walks can repeat
// vertices, which may misplace a split) are validated on a copy and dropped.
// `no_base_chords` keeps the base cycle (vertices 0..base-1) chordless.
void grow_step(PlaneBuilder& b, std::mt19937_64& rng, int budget, bool no_base_chords, int base) {
    auto faces = b.inner_faces();
    const auto walk = faces[pick(rng, (int)faces.size())];
    const int sz = (int)walk.size();
    const int op = pick(rng, 4);
    PlaneBuilder trial = b;
    if (op == 0) {
        if (sz < 4) return;
        int i = pick(rng, sz), j = pick(rng, sz);
        int u = walk[i], w = walk[j];
        int gap = std::min((i - j + sz) % sz, (j - i + sz) % sz);
        if (u == w || gap < 2 || has_edge(b, u, w)) return;
        if (no_base_chords && u < base && w < base) return;
        trial.insert_path(walk, i, j, 0);
    } else if (op == 1) {
        trial.attach_path(walk, pick(rng, sz), 1 + pick(rng, std::min(2, budget)));
    } else {
        int i = pick(rng, sz), j = pick(rng, sz);
        if (walk[i] == walk[j]) return;
        trial.insert_path(walk, i, j, 1 + pick(rng, std::min(3, budget)));
    }
    try {
        trial.build();
    } catch (const GraphError&) {
        return;
    }
    b = std::move(trial);
}

} // namespace

PlaneGraph gen_hex_patch(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw GraphError(Errc::BAD_PARAMS, "hex patch needs rows, cols >= 1");
    const int R = rows + 1, C = 2 * cols + 2;
    auto at = [&](int i, int j) { return i * C + j; };

    // brick-wall wiring: every horizontal edge, verticals where i+j is even
    std::vector<std::set<int>> adj(R * C);
    auto link = [&](int a, int b) { adj[a].insert(b); adj[b].insert(a); };
    for (int i = 0; i < R; ++i)
        for (int j = 0; j + 1 < C; ++j) link(at(i, j), at(i, j + 1));
    for (int i = 0; i + 1 < R; ++i)
        for (int j = 0; j < C; ++j)
            if ((i + j) % 2 == 0) link(at(i, j), at(i + 1, j));

    // the pattern leaves one stub in two corners; trim until every kept
    // vertex has degree >= 2
    for (bool again = true; again;) {
        again = false;
        for (int v = 0; v < R * C; ++v)
            if (adj[v].size() == 1) {
                adj[*adj[v].begin()].erase(v);
                adj[v].clear();
                again = true;
            }
    }

    std::vector<int> id(R * C, -1);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
            if (!adj[at(i, j)].empty()) {
                id[at(i, j)] = (int)pts.size();
                pts.emplace_back((double)j, (double)-i);
            }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < R * C; ++v)
        for (int u : adj[v])
            if (v < u) edges.emplace_back(id[v], id[u]);
    return build_from_points(pts, edges, nullptr);
}

PlaneGraph gen_random_plane(int n, std::uint64_t seed) {
    if (n < 3) throw GraphError(Errc::BAD_PARAMS, "gen_random_plane needs n >= 3");
    std::mt19937_64 rng(seed);
    PlaneBuilder b(3 + pick(rng, std::min(7, n - 2)));
    for (int guard = 0; b.n() < n; ++guard) {
        if (guard > 64 * n) throw GraphError(Errc::GENERATION_FAILED, "growth stalled");
        grow_step(b, rng, n - b.n(), false, 0);
    }
    return b.build();
}

PlaneGraph gen_random_inclass(int n, std::uint64_t seed) {
    if (n < 3) throw GraphError(Errc::BAD_PARAMS, "gen_random_inclass needs n >= 3");
    // a bare short cycle is in class: there is no second short cycle to clash with
    if (n <= 5) return PlaneBuilder(n).build();

    std::mt19937_64 rng(seed);
    const int base = std::min(n, 6 + pick(rng, 4));
    PlaneBuilder b(base);
    for (int guard = 0; b.n() < n; ++guard) {
        if (guard > 64 * n) throw GraphError(Errc::GENERATION_FAILED, "growth stalled");
        grow_step(b, rng, n - b.n(), /*no_base_chords=*/true, base);
    }

    // repair: while two short cycles sit within distance 2, delete the smallest
    // non-base edge of the second one. Such an edge exists (a cycle of length
    // <= 5 cannot use base edges alone) and lies on a cycle, so the graph stays
    // connected and the outer cycle stays intact and chordless.
    for (int guard = 0;; ++guard) {
        if (guard > 16 * n) throw GraphError(Errc::GENERATION_FAILED, "repair stalled");
        PlaneGraph G = b.build();
        InClassResult res = in_class(G);
        if (res.ok) return G;
        const std::vector<int>& cyc = res.witness->second.verts;
        std::pair<int, int> best{-1, -1};
        for (size_t t = 0; t < cyc.size(); ++t) {
            int u = cyc[t], v = cyc[(t + 1) % cyc.size()];
            if (u > v) std::swap(u, v);
            if (v < base) continue; // both endpoints on the base cycle
            if (best.first < 0 || std::pair<int, int>{u, v} < best) best = {u, v};
        }
        b.remove_edge(best.first, best.second);
    }
}

PlaneGraph gen_gadget(const std::string& id) { return build_gadget(id).host; }

} // namespace ifcolor
