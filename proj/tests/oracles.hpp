#pragma once
// Plain reference implementations used by the tests to cross-check library
// results. Deliberately written with different algorithms than src/ (leaf
// peeling instead of union-find, undeduped DFS + canonical-set insertion
// instead of rooted enumeration, ...), so that a bug has to happen twice to
// slip through.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ifcolor/coloring.hpp"
#include "ifcolor/plane_graph.hpp"
#include "ifcolor/reducibility.hpp"
#include "ifcolor/structures.hpp"

namespace oracle {

using ifcolor::Coloring;
using ifcolor::PlaneGraph;

inline std::vector<int> canon(const std::vector<int>& raw) {
    const int k = (int)raw.size();
    std::vector<int> best;
    for (int refl = 0; refl < 2; ++refl) {
        std::vector<int> seq = raw;
        if (refl) std::reverse(seq.begin(), seq.end());
        for (int s = 0; s < k; ++s) {
            std::vector<int> cand(k);
            for (int i = 0; i < k; ++i) cand[i] = seq[(s + i) % k];
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

// every simple cycle of length <= L, both traversal directions, deduped by
// canonical form
inline std::set<std::vector<int>> cycles_upto(const PlaneGraph& G, int L) {
    std::set<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(G.n(), 0);
    auto dfs = [&](auto&& self) -> void {
        int u = path.back();
        for (int w : G.neighbors(u)) {
            if (w == path.front() && path.size() >= 3) out.insert(canon(path));
            if (used[w] || (int)path.size() >= L) continue;
            used[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < G.n(); ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(dfs);
    }
    return out;
}

inline std::vector<int> cycle_lengths(const PlaneGraph& G, int L) {
    std::vector<int> lens;
    for (const auto& c : cycles_upto(G, L)) lens.push_back((int)c.size());
    std::sort(lens.begin(), lens.end());
    return lens;
}

// forest test by repeated leaf peeling
inline bool f_subgraph_is_forest(const PlaneGraph& G, const Coloring& phi) {
    std::vector<int> deg(G.n(), 0);
    std::vector<char> alive(G.n(), 0);
    std::vector<int> stack;
    int remaining = 0;
    for (int v = 0; v < G.n(); ++v) {
        if (!phi.is(v, 'F')) continue;
        alive[v] = 1;
        ++remaining;
        for (int u : G.neighbors(v))
            if (phi.is(u, 'F')) ++deg[v];
    }
    for (int v = 0; v < G.n(); ++v)
        if (alive[v] && deg[v] <= 1) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!alive[v]) continue;
        alive[v] = 0;
        --remaining;
        for (int u : G.neighbors(v))
            if (alive[u] && phi.is(u, 'F') && --deg[u] <= 1) stack.push_back(u);
    }
    return remaining == 0;
}

inline bool valid_if(const PlaneGraph& G, const Coloring& phi) {
    for (int u = 0; u < G.n(); ++u)
        if (phi.is(u, 'I'))
            for (int v : G.neighbors(u))
                if (v > u && phi.is(v, 'I')) return false;
    return f_subgraph_is_forest(G, phi);
}

// every all-F path with distinct F endpoints on Q and >=1 interior vertex,
// interior entirely off Q; pairs are (path, is_minimal)
inline std::vector<std::pair<std::vector<int>, bool>>
splitting_paths(const PlaneGraph& G, const std::vector<int>& Q, const Coloring& phi) {
    std::vector<char> onQ(G.n(), 0);
    for (int v : Q) onQ[v] = 1;
    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::vector<int>, bool>> out;
    std::vector<int> path;
    std::vector<char> used(G.n(), 0);
    auto minimal = [&](const std::vector<int>& p) {
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 2; j < p.size(); ++j) {
                if (i == 0 && j + 1 == p.size()) continue;
                if (G.has_edge(p[i], p[j])) return false;
            }
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        int u = path.back();
        for (int w : G.neighbors(u)) {
            if (!phi.is(w, 'F') || used[w]) continue;
            if (onQ[w]) {
                if (w != path.front() && path.size() >= 2) {
                    path.push_back(w);
                    std::vector<int> c = std::min(path, {path.rbegin(), path.rend()});
                    if (seen.insert(c).second) out.push_back({c, minimal(c)});
                    path.pop_back();
                }
                continue;
            }
            used[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int q : Q) {
        if (!phi.is(q, 'F')) continue;
        path = {q};
        std::fill(used.begin(), used.end(), 0);
        used[q] = 1;
        dfs(dfs);
    }
    return out;
}

inline bool valid_super(const PlaneGraph& G, const std::vector<int>& Q, const Coloring& phi) {
    return valid_if(G, phi) && splitting_paths(G, Q, phi).empty();
}

// exhaustive coloring census; cap keeps accidental blowups out of the suite
inline long long count_colorings(const PlaneGraph& G, int cap_bits = 20) {
    if (G.n() > cap_bits) throw std::runtime_error("oracle census too large");
    long long count = 0;
    for (long long mask = 0; mask < (1LL << G.n()); ++mask) {
        Coloring phi(G.n());
        for (int v = 0; v < G.n(); ++v) phi.col[v] = (mask >> v) & 1 ? 'F' : 'I';
        if (valid_if(G, phi)) ++count;
    }
    return count;
}

// naive structure scans on a cycle, directly off the definitions
struct CycleScan {
    std::set<std::pair<int, int>> chords;                    // endpoints, ascending
    std::set<std::tuple<int, int, int, int>> claws;          // center, attachments by position
    std::set<std::tuple<int, int, int, int, int, int>> triclaws; // triangle asc, attachments
};

inline CycleScan scan_cycle(const PlaneGraph& G, const std::vector<int>& C) {
    const int k = (int)C.size();
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[C[i]] = i;
    CycleScan out;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if ((j - i) % k == 1 || (i - j + k) % k == 1) continue;
            if (G.has_edge(C[i], C[j]))
                out.chords.insert({std::min(C[i], C[j]), std::max(C[i], C[j])});
        }
    for (int w = 0; w < G.n(); ++w) {
        if (pos.count(w)) continue;
        std::vector<int> att;
        for (int u : G.neighbors(w))
            if (pos.count(u)) att.push_back(u);
        std::sort(att.begin(), att.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        for (size_t a = 0; a < att.size(); ++a)
            for (size_t b = a + 1; b < att.size(); ++b)
                for (size_t c = b + 1; c < att.size(); ++c)
                    out.claws.insert({w, att[a], att[b], att[c]});
    }
    for (int x = 0; x < G.n(); ++x) {
        if (pos.count(x)) continue;
        for (int y : G.neighbors(x)) {
            if (y <= x || pos.count(y)) continue;
            for (int z : G.neighbors(y)) {
                if (z <= y || pos.count(z) || !G.has_edge(x, z)) continue;
                for (int ax : G.neighbors(x)) {
                    if (!pos.count(ax)) continue;
                    for (int ay : G.neighbors(y)) {
                        if (!pos.count(ay) || ay == ax) continue;
                        for (int az : G.neighbors(z)) {
                            if (!pos.count(az) || az == ax || az == ay) continue;
                            std::array<std::pair<int, int>, 3> corner = {
                                {{x, ax}, {y, ay}, {z, az}}};
                            std::sort(corner.begin(), corner.end(),
                                      [&](auto& p, auto& q) {
                                          return pos[p.second] < pos[q.second];
                                      });
                            out.triclaws.insert({x, y, z, corner[0].second,
                                                 corner[1].second, corner[2].second});
                        }
                    }
                }
            }
        }
    }
    return out;
}

// ---- naive configuration matcher -------------------------------------------
// Rediscovers the structural patterns with flat double loops over face pairs,
// brute containment tests on the vertex cycles, and the undeduped cycle scan
// above; cross-checks ifcolor::find_configs as (id, vertex set) multisets.

using MatchSet = std::multiset<std::pair<std::string, std::vector<int>>>;

inline MatchSet to_match_set(const std::vector<ifcolor::ConfigMatch>& ms) {
    MatchSet s;
    for (const auto& m : ms) s.insert({m.id, m.verts});
    return s;
}

inline std::vector<int> sorted_verts(const PlaneGraph& G, int f) {
    auto w = G.face(f).walk;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

inline bool face_is_simple(const PlaneGraph& G, int f) {
    return (int)sorted_verts(G, f).size() == G.face(f).degree();
}

// Edges lying between exactly the faces f and g, listed once, ascending.
inline std::vector<std::pair<int, int>> brute_shared(const PlaneGraph& G, int f, int g) {
    std::set<std::pair<int, int>> es;
    const auto& wf = G.face(f).walk;
    const auto& wg = G.face(g).walk;
    auto runs = [](const std::vector<int>& w, int a, int b) {
        const int k = (int)w.size();
        for (int i = 0; i < k; ++i) {
            int u = w[i], v = w[(i + 1) % k];
            if ((u == a && v == b) || (u == b && v == a)) return true;
        }
        return false;
    };
    for (int i = 0; i < (int)wf.size(); ++i) {
        int u = wf[i], v = wf[(i + 1) % wf.size()];
        if (runs(wg, u, v)) es.insert(std::minmax(u, v));
    }
    return {es.begin(), es.end()};
}

// Induced subgraph on U is one cycle through all of U plus the chord {x, y}:
// checked by removing the chord and walking the remainder as a cycle.
inline bool cycle_and_chord(const PlaneGraph& G, const std::vector<int>& U, int x, int y) {
    if (!G.has_edge(x, y)) return false;
    std::map<int, std::vector<int>> adj;
    for (int u : U)
        for (int v : U) {
            if (u >= v || !G.has_edge(u, v)) continue;
            if (std::minmax(u, v) == std::minmax(x, y)) continue; // drop the chord
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    for (int u : U)
        if (adj[u].size() != 2) return false;
    int prev = -1, cur = U[0], len = 0;
    do {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
    } while (cur != U[0] && len <= (int)U.size());
    return cur == U[0] && len == (int)U.size();
}

inline MatchSet naive_find_configs(const PlaneGraph& G) {
    MatchSet out;
    const int nf = G.face_count();

    for (int v = 0; v < G.n(); ++v)
        if (G.is_internal_vertex(v) && G.degree(v) <= 2) out.insert({"L2", {v}});

    std::set<int> on_short;
    for (const auto& c : cycles_upto(G, 5))
        for (int v : c) on_short.insert(v);

    // pairs (6-face, 5^- face) sharing at least one edge, checked longhand
    for (int f1 = 0; f1 < nf; ++f1) {
        if (G.face(f1).degree() != 6) continue;
        for (int f2 = 0; f2 < nf; ++f2) {
            if (f2 == f1 || G.face(f2).degree() > 5) continue;
            const auto es = brute_shared(G, f1, f2);
            if (es.empty()) continue;
            const auto [x, y] = es.front();
            const auto v1 = sorted_verts(G, f1);
            const auto v2 = sorted_verts(G, f2);
            std::vector<int> common, uni;
            std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                                  std::back_inserter(common));
            std::set_union(v1.begin(), v1.end(), v2.begin(), v2.end(),
                           std::back_inserter(uni));
            bool normal =
                es.size() == 1 && common.size() == 2 && cycle_and_chord(G, uni, x, y);
            if (normal)
                for (int u : v1)
                    if (u != x && u != y && on_short.count(u)) normal = false;
            if (!normal) out.insert({"L3", uni});
        }
    }

    // 6-face with five 3-vertices and one 4-vertex, small face on the 4-vertex
    for (int f = 0; f < nf; ++f) {
        if (!G.is_internal_face(f) || G.face(f).degree() != 6 || !face_is_simple(G, f))
            continue;
        const auto fv = sorted_verts(G, f);
        std::vector<int> fours;
        int n3 = 0;
        for (int u : fv)
            if (G.degree(u) == 3)
                ++n3;
            else if (G.degree(u) == 4)
                fours.push_back(u);
        if (n3 != 5 || fours.empty()) continue;
        const int v4 = fours.front();
        for (int s = 0; s < nf; ++s) {
            if (s == f || !G.is_internal_face(s) || G.face(s).degree() > 5 ||
                !face_is_simple(G, s))
                continue;
            const auto sv = sorted_verts(G, s);
            if (!std::binary_search(sv.begin(), sv.end(), v4)) continue;
            bool ok = true;
            for (int u : sv)
                if (u != v4 && G.degree(u) != 3) ok = false;
            const auto es = brute_shared(G, f, s);
            if (!ok || es.size() != 1) continue;
            const auto [a, b] = es.front();
            if (a != v4 && b != v4) continue;
            std::vector<int> uni;
            std::set_union(fv.begin(), fv.end(), sv.begin(), sv.end(),
                           std::back_inserter(uni));
            out.insert({"L4", uni});
        }
    }

    // all-3 small face, flanks on the far face across each directed edge
    for (int s = 0; s < nf; ++s) {
        if (!G.is_internal_face(s) || G.face(s).degree() > 5 || !face_is_simple(G, s))
            continue;
        const auto sv = sorted_verts(G, s);
        bool all3 = true;
        for (int u : sv)
            if (G.degree(u) != 3) all3 = false;
        if (!all3) continue;
        const auto& W = G.face(s).walk;
        const int k = (int)W.size();
        for (int i = 0; i < k; ++i) {
            const int x2 = W[i], x3 = W[(i + 1) % k];
            for (int B = 0; B < nf; ++B) {
                if (B == s || G.face(B).degree() < 6) continue;
                const auto& BW = G.face(B).walk;
                const int bk = (int)BW.size();
                for (int j = 0; j < bk; ++j) {
                    int y1, y4;
                    if (BW[j] == x2 && BW[(j + 1) % bk] == x3) {
                        y1 = BW[(j - 1 + bk) % bk];
                        y4 = BW[(j + 2) % bk];
                    } else if (BW[j] == x3 && BW[(j + 1) % bk] == x2) {
                        y4 = BW[(j - 1 + bk) % bk];
                        y1 = BW[(j + 2) % bk];
                    } else {
                        continue;
                    }
                    if (y1 == y4) continue;
                    if (std::binary_search(sv.begin(), sv.end(), y1) ||
                        std::binary_search(sv.begin(), sv.end(), y4))
                        continue;
                    if (!G.is_internal_vertex(y1) || !G.is_internal_vertex(y4)) continue;
                    if (G.degree(y1) != 3 || G.degree(y4) != 3) continue;
                    auto verts = sv;
                    verts.push_back(y1);
                    verts.push_back(y4);
                    std::sort(verts.begin(), verts.end());
                    out.insert({"L5", verts});
                }
            }
        }
    }

    // small face + 6-face across an oriented shared edge, labels by stepping
    // around the two vertex cycles away from the shared edge
    for (int s = 0; s < nf; ++s) {
        if (!G.is_internal_face(s) || !face_is_simple(G, s)) continue;
        const int sdeg = G.face(s).degree();
        if (sdeg < 3 || sdeg > 5) continue;
        const int m6 = sdeg + 4;
        const auto& SW = G.face(s).walk;
        for (int p1 = 0; p1 < sdeg; ++p1)
            for (int d1 : {1, -1}) {
                const int p6 = ((p1 + d1) % sdeg + sdeg) % sdeg;
                const int x1 = SW[p1], x6 = SW[p6];
                int B = -1;
                for (int cand = 0; cand < nf && B == -1; ++cand) {
                    if (cand == s || G.face(cand).degree() != 6) continue;
                    const std::pair<int, int> key{std::min(x1, x6), std::max(x1, x6)};
                    for (const auto& e : brute_shared(G, cand, s))
                        if (e == key) B = cand;
                }
                if (B == -1 || !G.is_internal_face(B) || !face_is_simple(G, B)) continue;
                std::vector<int> xs(m6 + 1, -1);
                xs[1] = x1;
                xs[6] = x6;
                for (int t = 1; t <= sdeg - 2; ++t)
                    xs[6 + t] = SW[((p6 + d1 * t) % sdeg + sdeg) % sdeg];
                const auto& BW = G.face(B).walk;
                int q1 = -1, q6 = -1;
                for (int j = 0; j < 6; ++j) {
                    if (BW[j] == x1) q1 = j;
                    if (BW[j] == x6) q6 = j;
                }
                const int d2 = (q1 + 1) % 6 == q6 ? -1 : 1;
                for (int t = 1; t <= 4; ++t)
                    xs[1 + t] = BW[((q1 + d2 * t) % 6 + 6) % 6];
                bool ok = true;
                for (int idx = 1; idx <= m6; ++idx) {
                    if (idx == 2) continue;
                    if (G.degree(xs[idx]) != 3) ok = false;
                }
                if (!ok || G.degree(xs[2]) > 4) continue;
                int third = -1;
                for (int u : G.neighbors(xs[m6]))
                    if (u != xs[1] && u != xs[m6 - 1]) third = u;
                if (third == -1 || !G.is_internal_vertex(third)) continue;
                auto verts = xs;
                verts.erase(verts.begin()); // slot 0 is unused
                verts.push_back(third);
                std::sort(verts.begin(), verts.end());
                verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                out.insert({"L6", verts});
            }
    }

    return out;
}

} // namespace oracle
