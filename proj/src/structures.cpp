#include "ifcolor/structures.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace ifcolor {

Cycle canonical_cycle(const std::vector<int>& raw) {
    const int k = (int)raw.size();
    assert(k >= 3);
    Cycle best;
    for (int refl = 0; refl < 2; ++refl) {
        std::vector<int> seq = raw;
        if (refl) std::reverse(seq.begin(), seq.end());
        for (int s = 0; s < k; ++s) {
            std::vector<int> cand(k);
            for (int i = 0; i < k; ++i) cand[i] = seq[(s + i) % k];
            if (best.verts.empty() || cand < best.verts) best.verts = std::move(cand);
        }
    }
    return best;
}

std::vector<Cycle> enumerate_short_cycles(const PlaneGraph& G, int Lmax) {
    // Rooted DFS: the root is the least vertex of the cycle, and the
    // direction is fixed by path[1] < path.back(), so every cycle is
    // produced exactly once.
    std::set<Cycle> out;
    std::vector<int> path;
    std::vector<char> on_path(G.n(), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        for (int w : G.neighbors(v)) {
            if (w == path[0] && (int)path.size() >= 3) {
                if (path[1] < path.back()) out.insert(canonical_cycle(path));
            }
            if ((int)path.size() >= Lmax) continue;
            if (w <= path[0] || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (int r = 0; r < G.n(); ++r) {
        path = {r};
        on_path.assign(G.n(), 0);
        on_path[r] = 1;
        dfs(dfs, r);
    }
    return {out.begin(), out.end()};
}

int cycle_distance(const PlaneGraph& G, const std::vector<int>& C1, const std::vector<int>& C2) {
    auto dist = bfs_distances(G, C1);
    int best = kInfDist;
    for (int v : C2)
        if (dist[v] >= 0) best = std::min(best, dist[v]);
    return best;
}

namespace {

std::pair<int, std::pair<Cycle, Cycle>> d_star_witnessed(const PlaneGraph& G) {
    auto cycles = enumerate_short_cycles(G, 5);
    int best = kInfDist;
    std::pair<Cycle, Cycle> wit;
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            int d = cycle_distance(G, cycles[i].verts, cycles[j].verts);
            if (d < best) {
                best = d;
                wit = {cycles[i], cycles[j]};
            }
        }
    return {best, wit};
}

} // namespace

int d_star(const PlaneGraph& G) { return d_star_witnessed(G).first; }

InClassResult in_class(const PlaneGraph& G) {
    auto [d, wit] = d_star_witnessed(G);
    InClassResult r;
    r.d_star = d;
    r.ok = d >= 3;
    if (!r.ok) r.witness = wit;
    return r;
}

const char* cycle_class_name(CycleClass c) {
    switch (c) {
    case CycleClass::GOOD: return "good";
    case CycleClass::BAD_I: return "bad-I";
    case CycleClass::BAD_II: return "bad-II";
    case CycleClass::NOT_NINE: return "not-9-cycle";
    }
    return "?";
}

StructureReport analyze_cycle(const PlaneGraph& G, const std::vector<int>& C) {
    G.require_cycle(C);
    const int k = (int)C.size();
    StructureReport rep;
    rep.length = k;

    std::vector<int> pos(G.n(), -1);
    for (int i = 0; i < k; ++i) pos[C[i]] = i;

    auto [inside, outside] = G.cycle_sides(C);
    std::vector<char> is_inside(G.n(), 0);
    for (int v : inside) is_inside[v] = 1;

    // chords
    for (int i = 0; i < k; ++i)
        for (int w : G.neighbors(C[i])) {
            int j = pos[w];
            if (j <= i) continue;
            if (j == i + 1 || (i == 0 && j == k - 1)) continue; // cycle edge
            int l1 = j - i + 1, l2 = k - (j - i) + 1;
            rep.chords.push_back({{C[i], C[j]}, {std::min(l1, l2), std::max(l1, l2)}});
        }

    // a part spans an arc plus the connecting off-cycle edges: 2 spokes for a
    // claw, 2 spokes and 1 triangle edge for a triclaw
    auto arc_parts = [&](std::array<int, 3> p, int extra) {
        std::array<int, 3> parts{p[1] - p[0] + extra, p[2] - p[1] + extra,
                                 k - p[2] + p[0] + extra};
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return parts;
    };

    // claws: any off-cycle vertex with three attachments, all 3-subsets
    for (int v = 0; v < G.n(); ++v) {
        if (pos[v] >= 0) continue;
        std::vector<int> att;
        for (int w : G.neighbors(v))
            if (pos[w] >= 0) att.push_back(pos[w]);
        std::sort(att.begin(), att.end());
        const int a = (int)att.size();
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                for (int l = j + 1; l < a; ++l) {
                    std::array<int, 3> p{att[i], att[j], att[l]};
                    ClawRec rec;
                    rec.center = v;
                    rec.attach = {C[p[0]], C[p[1]], C[p[2]]};
                    rec.parts = arc_parts(p, 2);
                    rec.inside = is_inside[v];
                    rep.claws.push_back(rec);
                }
    }

    // triclaws: off-cycle triangles with one chosen attachment per corner
    std::vector<int> off;
    for (int v = 0; v < G.n(); ++v)
        if (pos[v] < 0) off.push_back(v);
    for (size_t i = 0; i < off.size(); ++i)
        for (size_t j = i + 1; j < off.size(); ++j) {
            if (!G.has_edge(off[i], off[j])) continue;
            for (size_t l = j + 1; l < off.size(); ++l) {
                if (!G.has_edge(off[i], off[l]) || !G.has_edge(off[j], off[l])) continue;
                std::array<int, 3> tri{off[i], off[j], off[l]};
                std::array<std::vector<int>, 3> att;
                for (int t = 0; t < 3; ++t)
                    for (int w : G.neighbors(tri[t]))
                        if (pos[w] >= 0) att[t].push_back(pos[w]);
                for (int p0 : att[0])
                    for (int p1 : att[1])
                        for (int p2 : att[2]) {
                            if (p0 == p1 || p0 == p2 || p1 == p2) continue;
                            std::array<int, 3> p{p0, p1, p2};
                            std::sort(p.begin(), p.end());
                            TriclawRec rec;
                            rec.triangle = tri;
                            rec.attach = {C[p[0]], C[p[1]], C[p[2]]};
                            rec.parts = arc_parts(p, 3);
                            rec.inside = is_inside[tri[0]];
                            rep.triclaws.push_back(rec);
                        }
            }
        }

    if (k >= 10)
        rep.cls = CycleClass::NOT_NINE;
    else if (k == 9 && !rep.claws.empty())
        rep.cls = CycleClass::BAD_I;
    else if (k == 9 && !rep.triclaws.empty())
        rep.cls = CycleClass::BAD_II;
    else
        rep.cls = CycleClass::GOOD;

    // Bad vertices, one pair per leading structure. For a claw whose two
    // attachments q, q' are joined by a single cycle edge the pair flanks
    // them: (prev(q), next(q')). For a triclaw with three equal arcs the
    // pair is the second and third attachment. Otherwise omitted.
    if (rep.cls == CycleClass::BAD_I) {
        const ClawRec& c = rep.claws.front();
        std::array<int, 3> p;
        for (int t = 0; t < 3; ++t) p[t] = pos[c.attach[t]];
        for (int t = 0; t < 3 && !rep.bad_vertices; ++t) {
            int q = p[t], qn = p[(t + 1) % 3];
            if ((q + 1) % k == qn)
                rep.bad_vertices = {C[(q - 1 + k) % k], C[(qn + 1) % k]};
            else if ((qn + 1) % k == q)
                rep.bad_vertices = {C[(qn - 1 + k) % k], C[(q + 1) % k]};
        }
    } else if (rep.cls == CycleClass::BAD_II) {
        const TriclawRec& t = rep.triclaws.front();
        if (t.parts[0] == t.parts[1] && t.parts[1] == t.parts[2])
            rep.bad_vertices = {t.attach[1], t.attach[2]};
    }
    return rep;
}

bool is_special_9cycle(const PlaneGraph& G, const std::vector<int>& C) {
    if (C.size() != 9) throw GraphError(Errc::NOT_A_9CYCLE, "cycle has length " +
                                                                std::to_string(C.size()));
    StructureReport rep = analyze_cycle(G, C);
    for (const auto& ch : rep.chords)
        if (ch.splits == std::pair<int, int>{3, 8}) return true;
    for (const auto& cl : rep.claws)
        if (cl.parts == std::array<int, 3>{5, 5, 5}) return true;
    return false;
}

bool face_all_degree3(const PlaneGraph& G, int f) {
    for (int v : G.face(f).walk)
        if (G.degree(v) != 3) return false;
    return true;
}

int face_count_deg4plus(const PlaneGraph& G, int f) {
    int c = 0;
    std::set<int> seen;
    for (int v : G.face(f).walk)
        if (seen.insert(v).second && G.degree(v) >= 4) ++c;
    return c;
}

FaceRoles classify_faces(const PlaneGraph& G) {
    const int nf = G.face_count();
    FaceRoles r;
    r.internal_face.assign(nf, 0);
    r.in_F1.assign(nf, 0);
    r.special3.assign(nf, 0);
    r.special6.assign(nf, 0);
    r.bad.assign(nf, 0);
    r.pendent_vertices.assign(nf, {});

    const int D = G.outer_face();
    for (int f = 0; f < nf; ++f) {
        r.internal_face[f] = G.is_internal_face(f);
        if (f == D) continue;
        for (int v : G.face(f).walk)
            if (G.is_boundary_vertex(v)) {
                r.in_F1[f] = 1;
                break;
            }
    }

    for (int f = 0; f < nf; ++f) {
        if (G.face(f).degree() == 3 && r.internal_face[f] && face_count_deg4plus(G, f) <= 1)
            r.special3[f] = 1;
    }
    for (int f = 0; f < nf; ++f) {
        if (G.face(f).degree() != 6 || !r.internal_face[f]) continue;
        for (int g : G.adjacent_faces(f))
            if (r.special3[g]) {
                r.special6[f] = 1;
                break;
            }
    }
    for (int f = 0; f < nf; ++f) {
        if (G.face(f).degree() < 6 || !r.in_F1[f]) continue;
        for (int g : G.adjacent_faces(f))
            if (G.face(g).degree() <= 5) {
                r.bad[f] = 1;
                break;
            }
    }

    // pendent vertices: v not on f but with a neighbor on f
    for (int f = 0; f < nf; ++f) {
        std::set<int> on(G.face(f).walk.begin(), G.face(f).walk.end());
        std::set<int> pend;
        for (int u : on)
            for (int v : G.neighbors(u))
                if (!on.count(v)) pend.insert(v);
        r.pendent_vertices[f].assign(pend.begin(), pend.end());
    }

    // roofs and bases
    for (int g = 0; g < nf; ++g) {
        if (G.face(g).degree() != 6 || !r.internal_face[g] || !face_all_degree3(G, g)) continue;
        std::set<int> on(G.face(g).walk.begin(), G.face(g).walk.end());
        for (int gp : G.adjacent_faces(g)) {
            if (G.face(gp).degree() != 3 || !r.internal_face[gp]) continue;
            std::vector<int> offv;
            for (int v : G.face(gp).walk)
                if (!on.count(v)) offv.push_back(v);
            if (offv.size() == 1) r.roof_base.push_back({offv[0], g});
        }
    }
    return r;
}

} // namespace ifcolor
