#include "ifcolor/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <set>

namespace ifcolor {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NON_SYMMETRIC: return "NON_SYMMETRIC";
    case Errc::DISCONNECTED: return "DISCONNECTED";
    case Errc::EULER_VIOLATION: return "EULER_VIOLATION";
    case Errc::BAD_OUTER_FACE: return "BAD_OUTER_FACE";
    case Errc::NOT_A_CYCLE: return "NOT_A_CYCLE";
    case Errc::NOT_A_9CYCLE: return "NOT_A_9CYCLE";
    case Errc::PARTIAL_COLORING: return "PARTIAL_COLORING";
    case Errc::ALREADY_COLORED: return "ALREADY_COLORED";
    case Errc::HYPOTHESIS_VIOLATED: return "HYPOTHESIS_VIOLATED";
    case Errc::INVALID_PRECOLORING: return "INVALID_PRECOLORING";
    case Errc::TOO_LARGE: return "TOO_LARGE";
    case Errc::BAD_PARAMS: return "BAD_PARAMS";
    case Errc::UNKNOWN_ID: return "UNKNOWN_ID";
    case Errc::GENERATION_FAILED: return "GENERATION_FAILED";
    case Errc::PARSE_ERROR: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

PlaneGraph PlaneGraph::build(std::vector<std::vector<int>> rotation,
                             const std::vector<int>* outer_hint) {
    PlaneGraph G;
    G.rotation_ = std::move(rotation);
    const int n = G.n();
    if (n == 0) throw GraphError(Errc::BAD_PARAMS, "empty graph");

    int dart_count = 0;
    G.dart_offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        G.dart_offset_[v] = dart_count;
        std::set<int> seen;
        for (int u : G.rotation_[v]) {
            if (u < 0 || u >= n)
                throw GraphError(Errc::PARSE_ERROR, "neighbor id out of range");
            if (u == v) throw GraphError(Errc::NON_SYMMETRIC, "loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw GraphError(Errc::NON_SYMMETRIC, "parallel edge at vertex " + std::to_string(v));
        }
        for (int i = 0; i < (int)G.rotation_[v].size(); ++i)
            G.pos_[dart_key(v, G.rotation_[v][i])] = i;
        dart_count += (int)G.rotation_[v].size();
    }
    G.dart_offset_[n] = dart_count;

    for (int v = 0; v < n; ++v)
        for (int u : G.rotation_[v])
            if (!G.pos_.count(dart_key(u, v)))
                throw GraphError(Errc::NON_SYMMETRIC,
                                 std::to_string(v) + " lists " + std::to_string(u) +
                                     " but not vice versa");
    if (dart_count % 2 != 0) throw GraphError(Errc::NON_SYMMETRIC, "odd dart count");
    G.edge_count_ = dart_count / 2;

    std::vector<int> dist = bfs_distances(G, {0});
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) throw GraphError(Errc::DISCONNECTED, "vertex " + std::to_string(v));

    G.trace_faces();
    if (n - G.edge_count_ + (int)G.faces_.size() != 2)
        throw GraphError(Errc::EULER_VIOLATION,
                         "V-E+F = " + std::to_string(n - G.edge_count_ + (int)G.faces_.size()));

    G.pick_outer(outer_hint);
    G.finish_outer();
    return G;
}

void PlaneGraph::trace_faces() {
    dart_face_.assign(dart_offset_.back(), -1);
    for (int v = 0; v < n(); ++v) {
        for (int i = 0; i < (int)rotation_[v].size(); ++i) {
            if (dart_face_[dart_offset_[v] + i] != -1) continue;
            FaceWalk f;
            f.id = (int)faces_.size();
            int cu = v, ci = i;
            do {
                dart_face_[dart_offset_[cu] + ci] = f.id;
                f.walk.push_back(cu);
                int cv = rotation_[cu][ci];
                // continue with the dart leaving cv toward the predecessor of cu
                int j = rot_pos(cv, cu);
                int deg = (int)rotation_[cv].size();
                int nj = (j - 1 + deg) % deg;
                cu = cv;
                ci = nj;
            } while (!(cu == v && ci == i));
            faces_.push_back(std::move(f));
        }
    }
}

void PlaneGraph::pick_outer(const std::vector<int>* hint) {
    if (hint) {
        outer_hinted_ = true;
        for (const auto& f : faces_) {
            if (cyclic_equal(f.walk, *hint)) {
                outer_ = f.id;
                return;
            }
        }
        throw GraphError(Errc::BAD_OUTER_FACE, "outer walk does not match any traced face");
    }
    outer_hinted_ = false;
    int best = 0;
    for (const auto& f : faces_)
        if (f.degree() > faces_[best].degree()) best = f.id;
    outer_ = best;
}

void PlaneGraph::finish_outer() {
    on_outer_.assign(n(), 0);
    for (int v : faces_[outer_].walk) on_outer_[v] = 1;
}

int PlaneGraph::face_of_dart(int u, int v) const {
    return dart_face_[dart_offset_[u] + rot_pos(u, v)];
}

std::pair<int, int> PlaneGraph::faces_of_edge(int u, int v) const {
    return {face_of_dart(u, v), face_of_dart(v, u)};
}

std::vector<int> PlaneGraph::faces_at_vertex(int v) const {
    std::vector<int> out;
    for (int i = 0; i < (int)rotation_[v].size(); ++i) {
        int f = dart_face_[dart_offset_[v] + i];
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

std::vector<int> PlaneGraph::adjacent_faces(int f) const {
    std::vector<int> out;
    const auto& w = faces_[f].walk;
    for (int i = 0; i < (int)w.size(); ++i) {
        int u = w[i], v = w[(i + 1) % w.size()];
        int g = face_of_dart(v, u);
        if (g != f && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return out;
}

bool PlaneGraph::is_internal_face(int f) const {
    for (int v : faces_[f].walk)
        if (on_outer_[v]) return false;
    return true;
}

bool PlaneGraph::is_cycle(const std::vector<int>& C) const {
    if (C.size() < 3) return false;
    std::set<int> seen;
    for (int v : C) {
        if (v < 0 || v >= n()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (int i = 0; i < (int)C.size(); ++i)
        if (!has_edge(C[i], C[(i + 1) % C.size()])) return false;
    return true;
}

void PlaneGraph::require_cycle(const std::vector<int>& C) const {
    if (!is_cycle(C)) throw GraphError(Errc::NOT_A_CYCLE, "walk is not a cycle of the graph");
}

std::pair<std::vector<int>, std::vector<int>>
PlaneGraph::cycle_sides(const std::vector<int>& C) const {
    require_cycle(C);
    const int k = (int)C.size();
    std::vector<int> pos_on_C(n(), -1);
    for (int i = 0; i < k; ++i) pos_on_C[C[i]] = i;

    // components of G - V(C)
    std::vector<int> comp(n(), -1);
    int ncomp = 0;
    for (int s = 0; s < n(); ++s) {
        if (pos_on_C[s] >= 0 || comp[s] >= 0) continue;
        std::deque<int> q{s};
        comp[s] = ncomp;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : rotation_[u])
                if (pos_on_C[w] < 0 && comp[w] < 0) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
        }
        ++ncomp;
    }

    // classify attachment darts and locate the outer face's side.
    // At a cycle vertex c with next/prev cycle neighbors a and b, rotation
    // positions strictly between a and b (counterclockwise) hang on side A,
    // the rest on side B; the face sector starting at position j belongs to
    // side A iff j lies in [pos(a), pos(b)) counterclockwise.
    std::vector<int> comp_side(ncomp, -1);
    int outer_side = -1;
    auto note_outer = [&](int side) {
        if (outer_side == -1) outer_side = side;
        assert(outer_side == side && "outer face seen from both sides of a cycle");
    };
    for (int t = 0; t < k; ++t) {
        int c = C[t];
        int a = C[(t + 1) % k], b = C[(t - 1 + k) % k];
        int deg = (int)rotation_[c].size();
        int ia = rot_pos(c, a), ib = rot_pos(c, b);
        for (int j = ia; j != ib; j = (j + 1) % deg) {
            if (dart_face_[dart_offset_[c] + j] == outer_) note_outer(0);
            int x = rotation_[c][j];
            if (j != ia && pos_on_C[x] < 0) {
                int& s = comp_side[comp[x]];
                assert(s == -1 || s == 0);
                s = 0;
            }
        }
        for (int j = ib; j != ia; j = (j + 1) % deg) {
            if (dart_face_[dart_offset_[c] + j] == outer_) note_outer(1);
            int x = rotation_[c][j];
            if (j != ib && pos_on_C[x] < 0) {
                int& s = comp_side[comp[x]];
                assert(s == -1 || s == 1);
                s = 1;
            }
        }
    }
    if (outer_side == -1) {
        // the outer face touches no vertex of C, so it hides behind whatever
        // component carries the boundary vertices
        for (int v = 0; v < n(); ++v)
            if (on_outer_[v] && pos_on_C[v] < 0) {
                outer_side = comp_side[comp[v]];
                break;
            }
    }
    assert(outer_side != -1);

    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v = 0; v < n(); ++v) {
        if (pos_on_C[v] >= 0) continue;
        assert(comp_side[comp[v]] != -1);
        if (comp_side[comp[v]] == outer_side)
            out.second.push_back(v);
        else
            out.first.push_back(v);
    }
    return out;
}

PlaneGraph PlaneGraph::with_outer_face(const std::vector<int>& hint) const {
    return build(rotation_, &hint);
}

PlaneGraph PlaneGraph::with_outer_face_id(int f) const {
    if (f < 0 || f >= face_count()) throw GraphError(Errc::BAD_OUTER_FACE, "no such face");
    PlaneGraph G = *this;
    G.outer_ = f;
    G.outer_hinted_ = true;
    G.finish_outer();
    return G;
}

int PlaneGraph::rot_pos(int u, int v) const {
    auto it = pos_.find(dart_key(u, v));
    assert(it != pos_.end());
    return it->second;
}

std::vector<int> bfs_distances(const PlaneGraph& G, const std::vector<int>& sources) {
    std::vector<int> dist(G.n(), -1);
    std::deque<int> q;
    for (int s : sources) {
        dist[s] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : G.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    const int k = (int)a.size();
    if ((int)b.size() != k) return false;
    for (int refl = 0; refl < 2; ++refl) {
        std::vector<int> bb = b;
        if (refl) std::reverse(bb.begin(), bb.end());
        for (int s = 0; s < k; ++s) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = a[i] == bb[(s + i) % k];
            if (ok) return true;
        }
    }
    return false;
}

PlaneBuilder::PlaneBuilder(int cycle_len) {
    assert(cycle_len >= 3);
    rotation_.resize(cycle_len);
    base_.resize(cycle_len);
    for (int i = 0; i < cycle_len; ++i) {
        base_[i] = i;
        rotation_[i] = {(i - 1 + cycle_len) % cycle_len, (i + 1) % cycle_len};
    }
}

std::vector<std::vector<int>> PlaneBuilder::inner_faces() const {
    // retrace; the outer face is the one containing the dart base[1] -> base[0]
    PlaneGraph G = build();
    int outer = G.face_of_dart(base_[1], base_[0]);
    std::vector<std::vector<int>> out;
    for (const auto& f : G.faces())
        if (f.id != outer) out.push_back(f.walk);
    return out;
}

void PlaneBuilder::insert_before(int at, int before_neighbor, int added) {
    auto& rot = rotation_[at];
    auto it = std::find(rot.begin(), rot.end(), before_neighbor);
    assert(it != rot.end());
    rot.insert(it, added);
}

std::vector<int> PlaneBuilder::insert_path(const std::vector<int>& walk, int i, int j, int len) {
    const int sz = (int)walk.size();
    int u = walk[i], w = walk[j];
    assert(i != j && u != w);
    std::vector<int> path(len);
    for (int t = 0; t < len; ++t) {
        path[t] = (int)rotation_.size();
        rotation_.emplace_back();
    }
    int u_pred = walk[(i - 1 + sz) % sz];
    int w_pred = walk[(j - 1 + sz) % sz];
    int u_new = len ? path.front() : w;
    int w_new = len ? path.back() : u;
    insert_before(u, u_pred, u_new);
    insert_before(w, w_pred, w_new);
    for (int t = 0; t < len; ++t) {
        int prev = t == 0 ? u : path[t - 1];
        int next = t == len - 1 ? w : path[t + 1];
        rotation_[path[t]] = {prev, next};
    }
    return path;
}

std::vector<int> PlaneBuilder::attach_path(const std::vector<int>& walk, int i, int len) {
    assert(len >= 1);
    const int sz = (int)walk.size();
    int u = walk[i];
    std::vector<int> path(len);
    for (int t = 0; t < len; ++t) {
        path[t] = (int)rotation_.size();
        rotation_.emplace_back();
    }
    insert_before(u, walk[(i - 1 + sz) % sz], path.front());
    for (int t = 0; t < len; ++t) {
        int prev = t == 0 ? u : path[t - 1];
        rotation_[path[t]].push_back(prev);
        if (t + 1 < len) rotation_[path[t]].push_back(path[t + 1]);
    }
    return path;
}

void PlaneBuilder::remove_edge(int u, int v) {
    auto& ru = rotation_[u];
    auto& rv = rotation_[v];
    ru.erase(std::find(ru.begin(), ru.end(), v));
    rv.erase(std::find(rv.begin(), rv.end(), u));
}

PlaneGraph PlaneBuilder::build() const {
    return PlaneGraph::build(rotation_, &base_);
}

PlaneGraph build_from_points(const std::vector<std::pair<double, double>>& pts,
                             const std::vector<std::pair<int, int>>& edges,
                             const std::vector<int>* outer_hint) {
    std::vector<std::vector<int>> rot(pts.size());
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    for (int v = 0; v < (int)pts.size(); ++v) {
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            double ang_a = std::atan2(pts[a].second - pts[v].second, pts[a].first - pts[v].first);
            double ang_b = std::atan2(pts[b].second - pts[v].second, pts[b].first - pts[v].first);
            return ang_a < ang_b;
        });
    }
    return PlaneGraph::build(std::move(rot), outer_hint);
}

} // namespace ifcolor
