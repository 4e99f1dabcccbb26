#include "ifcolor/reducibility.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ifcolor/structures.hpp"

namespace ifcolor {

namespace {

// ---- gadget assembly -----------------------------------------------------

// Rotation system from an explicit list of closed face walks. Within a walk
// ...x,u,y... the dart u->y is traced right after x->u, which pins x as the
// rotation successor of y at u; chaining the successors recovers rotation[u].
// Every dart must be used exactly once and every chain must close, so an
// inconsistent face list fails here (or in PlaneGraph::build right after).
PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& faces,
                      const std::vector<int>& outer) {
    std::vector<std::map<int, int>> succ(n);
    for (const auto& W : faces) {
        const int k = static_cast<int>(W.size());
        for (int i = 0; i < k; ++i) {
            int x = W[(i + k - 1) % k], u = W[i], y = W[(i + 1) % k];
            if (!succ[u].emplace(y, x).second)
                throw std::logic_error("face list reuses dart " + std::to_string(u) + "->" +
                                       std::to_string(y));
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int u = 0; u < n; ++u) {
        const auto& s = succ[u];
        if (s.empty()) throw std::logic_error("vertex " + std::to_string(u) + " is on no face");
        const int start = s.begin()->first;
        int cur = start;
        do {
            rot[u].push_back(cur);
            auto it = s.find(cur);
            if (it == s.end()) break;
            cur = it->second;
        } while (cur != start && rot[u].size() <= s.size());
        if (cur != start || rot[u].size() != s.size())
            throw std::logic_error("open rotation at vertex " + std::to_string(u));
    }
    return PlaneGraph::build(std::move(rot), &outer);
}

std::pair<double, double> polar(double deg, double r) {
    const double rad = deg * std::acos(-1.0) / 180.0;
    return {r * std::cos(rad), r * std::sin(rad)};
}

// Degree-2 vertex bridging an 8-ring; both inner faces are 6-faces.
Gadget make_l2() {
    const int v = 0;
    std::vector<int> ring(8);
    std::iota(ring.begin(), ring.end(), 1);
    std::vector<std::vector<int>> fl;
    fl.push_back(ring);
    fl.push_back({v, ring[4], ring[3], ring[2], ring[1], ring[0]});
    fl.push_back({v, ring[0], ring[7], ring[6], ring[5], ring[4]});
    return Gadget{from_faces(9, fl, ring), ring, {v}, {ring[0], ring[4]}, {}, "L2"};
}

// Contour cycle v1..vt (ids 0..t-1) with chord v5-vt, splitting into the
// 6-face [v1..v5,vt] and a (t-4)-face. Every contour vertex except vt gets a
// ring attachment u_i; gaps of two padding vertices keep all context faces
// at length >= 6.
Gadget make_l4(int t) {
    const int L = 3 * (t - 1);
    auto rid = [&](int j) { return t + ((j % L) + L) % L; };
    std::vector<int> ring(L);
    for (int j = 0; j < L; ++j) ring[j] = rid(j);
    std::vector<std::vector<int>> fl;
    fl.push_back(ring);
    fl.push_back({4, 3, 2, 1, 0, t - 1});
    std::vector<int> small = {4, t - 1};
    for (int i = t - 2; i >= 5; --i) small.push_back(i);
    fl.push_back(small);
    for (int i = 1; i <= t - 2; ++i)
        fl.push_back({i - 1, i, rid(3 * i), rid(3 * i - 1), rid(3 * i - 2), rid(3 * (i - 1))});
    fl.push_back({t - 2, t - 1, 0, rid(0), rid(L - 1), rid(L - 2), rid(3 * (t - 2))});
    std::vector<int> core(t);
    std::iota(core.begin(), core.end(), 0);
    std::vector<int> bd;
    for (int i = 1; i <= t - 1; ++i) bd.push_back(rid(3 * (i - 1)));
    return Gadget{from_faces(t + L, fl, ring), ring, std::move(core), std::move(bd),
                  {}, "L4:" + std::to_string(t)};
}

// All-3 k-face x1..xk (ids 0..k-1) next to the 6-face [y0,y1,x2,x3,y4,y5]
// whose flanks y1, y4 (ids k, k+1) are internal 3-vertices; y0, y5 sit on
// the ring as an edge, x1 and the remaining x's hang on ring attachments.
Gadget make_l5(int k) {
    const int y1 = k, y4 = k + 1, base = k + 2;
    const int L = k == 3 ? 13 : k == 4 ? 16 : 19;
    auto rid = [&](int j) { return base + ((j % L) + L) % L; };
    std::vector<int> ring(L);
    for (int j = 0; j < L; ++j) ring[j] = rid(j);
    std::vector<std::vector<int>> fl;
    fl.push_back(ring);
    fl.push_back({0, 1, y1, rid(2), rid(1), rid(0)});
    fl.push_back({y1, rid(6), rid(5), rid(4), rid(3), rid(2)});
    fl.push_back({rid(6), y1, 1, 2, y4, rid(7)});
    fl.push_back({y4, rid(11), rid(10), rid(9), rid(8), rid(7)});
    if (k == 3) {
        fl.push_back({y4, 2, 0, rid(13), rid(12), rid(11)});
        fl.push_back({0, 2, 1});
    } else if (k == 4) {
        fl.push_back({y4, 2, 3, rid(13), rid(12), rid(11)});
        fl.push_back({3, 0, rid(16), rid(15), rid(14), rid(13)});
        fl.push_back({0, 3, 2, 1});
    } else {
        fl.push_back({y4, 2, 3, rid(13), rid(12), rid(11)});
        fl.push_back({3, 4, rid(16), rid(15), rid(14), rid(13)});
        fl.push_back({4, 0, rid(19), rid(18), rid(17), rid(16)});
        fl.push_back({0, 4, 3, 2, 1});
    }
    std::vector<int> core(k + 2);
    std::iota(core.begin(), core.end(), 0);
    std::vector<int> bd = {rid(0), rid(2), rid(6), rid(7), rid(11)};
    if (k >= 4) bd.push_back(rid(13));
    if (k == 5) bd.push_back(rid(16));
    return Gadget{from_faces(base + L, fl, ring), ring, std::move(core), std::move(bd),
                  {{rid(0), rid(6)}}, "L5:" + std::to_string(k)};
}

// 6-face [x1..x6] sharing the edge x1x6 with the (m-4)-face [x1,x6,x7..xm];
// contour ids 0..m-1, every vertex degree 3 except x2 (degree 4, two ring
// attachments), and the third neighbor x of xm (id m) kept internal above a
// ring pocket.
Gadget make_l6(int m) {
    const int x = m, base = m + 1;
    const int L = m == 7 ? 20 : m == 8 ? 22 : 25;
    auto rid = [&](int j) { return base + ((j % L) + L) % L; };
    std::vector<int> ring(L);
    for (int j = 0; j < L; ++j) ring[j] = rid(j);
    const int pa = m == 7 ? 15 : m == 8 ? 17 : 20;
    const int pb = pa + 4;
    std::vector<std::vector<int>> fl;
    fl.push_back(ring);
    fl.push_back({5, 4, 3, 2, 1, 0});
    if (m == 7)
        fl.push_back({5, 0, 6});
    else if (m == 8)
        fl.push_back({5, 0, 7, 6});
    else
        fl.push_back({5, 0, 8, 7, 6});
    fl.push_back({1, rid(4), rid(3), rid(2), rid(1), rid(0)});
    fl.push_back({1, 2, rid(7), rid(6), rid(5), rid(4)});
    fl.push_back({2, 3, rid(10), rid(9), rid(8), rid(7)});
    fl.push_back({3, 4, rid(13), rid(12), rid(11), rid(10)});
    if (m == 7) {
        fl.push_back({4, 5, 6, x, rid(15), rid(14), rid(13)});
    } else if (m == 8) {
        fl.push_back({4, 5, 6, rid(15), rid(14), rid(13)});
        fl.push_back({6, 7, x, rid(17), rid(16), rid(15)});
    } else {
        fl.push_back({4, 5, 6, rid(15), rid(14), rid(13)});
        fl.push_back({6, 7, rid(18), rid(17), rid(16), rid(15)});
        fl.push_back({7, 8, x, rid(20), rid(19), rid(18)});
    }
    fl.push_back({x, rid(pb), rid(pb - 1), rid(pb - 2), rid(pb - 3), rid(pa)});
    fl.push_back({x, m - 1, 0, 1, rid(0), rid(pb)});
    std::vector<int> core(m);
    std::iota(core.begin(), core.end(), 0);
    std::vector<int> bd = {rid(0), rid(4), rid(7), rid(10), rid(13)};
    if (m >= 8) bd.push_back(rid(15));
    if (m == 9) bd.push_back(rid(18));
    bd.push_back(x);
    return Gadget{from_faces(base + L, fl, ring), ring, std::move(core), std::move(bd),
                  {{x, rid(4)}}, "L6:" + std::to_string(m)};
}

// 9-cycle with a claw center adjacent to rim 0, 4, 5 (arc parts 3, 6, 6).
Gadget make_fig2a() {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> ed;
    for (int i = 0; i < 9; ++i) {
        pts.push_back(polar(40.0 * i + 50.0, 1.0));
        ed.push_back({i, (i + 1) % 9});
    }
    pts.push_back({0.0, 0.0});
    for (int a : {0, 4, 5}) ed.push_back({9, a});
    std::vector<int> rim(9);
    std::iota(rim.begin(), rim.end(), 0);
    return Gadget{build_from_points(pts, ed, &rim), rim, {9}, {0, 4, 5}, {}, "FIG2A"};
}

// 9-cycle with an inner triangle attached to rim 0, 3, 6 (three 6-faces).
Gadget make_fig2b() {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> ed;
    for (int i = 0; i < 9; ++i) {
        pts.push_back(polar(40.0 * i + 50.0, 1.0));
        ed.push_back({i, (i + 1) % 9});
    }
    pts.push_back(polar(50.0, 0.35));
    pts.push_back(polar(170.0, 0.35));
    pts.push_back(polar(290.0, 0.35));
    ed.insert(ed.end(), {{9, 0}, {10, 3}, {11, 6}, {9, 10}, {10, 11}, {11, 9}});
    std::vector<int> rim(9);
    std::iota(rim.begin(), rim.end(), 0);
    return Gadget{build_from_points(pts, ed, &rim), rim, {9, 10, 11}, {0, 3, 6}, {}, "FIG2B"};
}

// The two drawn local structures around a 9-cycle: a tree of 3-vertices
// inside the rim, with either a 2-claw center w over the rim edge v5v6
// (variant a) or a triangle w,w1,w2 reaching rim v4 and v7 (variant b).
Gadget make_fig3(bool variant_b) {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> ed;
    for (int i = 0; i < 9; ++i) {
        pts.push_back(polar(40.0 * i + 90.0, 1.0));
        ed.push_back({i, (i + 1) % 9});
    }
    pts.push_back({0.1, 0.7});    //  9: x1
    pts.push_back({0.25, 0.4});   // 10: x2
    pts.push_back({0.25, 0.1});   // 11: y1
    pts.push_back({0.25, -0.2});  // 12: y0
    pts.push_back({0.0, -0.5});   // 13: w
    pts.push_back({0.55, 0.1});   // 14: t1
    pts.push_back({-0.25, 0.4});  // 15: x3
    pts.push_back({-0.25, 0.1});  // 16: y4
    pts.push_back({-0.25, -0.2}); // 17: y5
    pts.push_back({-0.1, 0.7});   // 18: x4
    ed.insert(ed.end(), {{0, 9},
                         {9, 10},
                         {10, 11},
                         {11, 12},
                         {12, 13},
                         {11, 14},
                         {10, 15},
                         {15, 16},
                         {16, 17},
                         {15, 18}});
    if (variant_b) {
        pts.push_back(polar(250.0, 0.7)); // 19: w1
        pts.push_back(polar(290.0, 0.7)); // 20: w2
        ed.insert(ed.end(), {{13, 19}, {13, 20}, {19, 20}, {19, 3}, {20, 6}});
    } else {
        ed.insert(ed.end(), {{13, 4}, {13, 5}});
    }
    std::vector<int> rim(9);
    std::iota(rim.begin(), rim.end(), 0);
    std::vector<int> core(pts.size() - 9);
    std::iota(core.begin(), core.end(), 9);
    std::vector<int> bd = variant_b ? std::vector<int>{0, 3, 6} : std::vector<int>{0, 4, 5};
    return Gadget{build_from_points(pts, ed, &rim), rim, std::move(core), std::move(bd), {},
                  variant_b ? "FIG3B" : "FIG3A"};
}

int parse_param(const std::string& id, size_t colon) {
    if (colon == std::string::npos || colon + 1 >= id.size())
        throw GraphError(Errc::BAD_PARAMS, id + ": missing parameter");
    try {
        return std::stoi(id.substr(colon + 1));
    } catch (const std::exception&) {
        throw GraphError(Errc::BAD_PARAMS, id + ": bad parameter");
    }
}

} // namespace

Gadget build_gadget(const std::string& id) {
    if (id == "L2") return make_l2();
    if (id == "FIG2A") return make_fig2a();
    if (id == "FIG2B") return make_fig2b();
    if (id == "FIG3A") return make_fig3(false);
    if (id == "FIG3B") return make_fig3(true);
    const size_t colon = id.find(':');
    const std::string fam = id.substr(0, colon);
    if (fam == "L3")
        throw GraphError(Errc::BAD_PARAMS, "L3 is an adjacency statement, not a gadget");
    if (fam == "L4") {
        const int t = parse_param(id, colon);
        if (t < 7 || t > 9) throw GraphError(Errc::BAD_PARAMS, id + ": t must be 7..9");
        return make_l4(t);
    }
    if (fam == "L5") {
        const int k = parse_param(id, colon);
        if (k < 3 || k > 5) throw GraphError(Errc::BAD_PARAMS, id + ": k must be 3..5");
        return make_l5(k);
    }
    if (fam == "L6") {
        const int m = parse_param(id, colon);
        if (m < 7 || m > 9) throw GraphError(Errc::BAD_PARAMS, id + ": m must be 7..9");
        return make_l6(m);
    }
    throw GraphError(Errc::UNKNOWN_ID, id);
}

// ---- exhaustive verification ----------------------------------------------

namespace {

long long pow3(int b) {
    long long r = 1;
    while (b-- > 0) r *= 3;
    return r;
}

std::vector<BoundaryState> decode_pattern(long long idx, int b) {
    std::vector<BoundaryState> st(b);
    for (int i = 0; i < b; ++i, idx /= 3) {
        const int d = static_cast<int>(idx % 3);
        st[i] = d == 0 ? BoundaryState{'I', false}
                       : BoundaryState{'F', d == 2};
    }
    return st;
}

int boundary_index(const Gadget& g, int v) {
    const auto it = std::find(g.boundary.begin(), g.boundary.end(), v);
    if (it == g.boundary.end()) throw std::logic_error("tied vertex not on boundary");
    return static_cast<int>(it - g.boundary.begin());
}

// A context pattern is consistent iff it has no I-I edge inside the gadget
// and agrees on every tied pair; the outside-I bit encodes far-side
// adjacency and excludes (I, true) by construction of the state space.
bool pattern_consistent(const Gadget& g, const std::vector<BoundaryState>& st) {
    for (size_t i = 0; i < st.size(); ++i) {
        if (st[i].color != 'I') continue;
        for (size_t j = i + 1; j < st.size(); ++j)
            if (st[j].color == 'I' && g.host.has_edge(g.boundary[i], g.boundary[j]))
                return false;
    }
    for (const auto& [a, b] : g.tied)
        if (st[boundary_index(g, a)].color != st[boundary_index(g, b)].color) return false;
    return true;
}

// rep[v] = anchor representative for the splitting scan (-1 off the context).
// Anchors are the ring plus any boundary vertex kept off the ring; tied
// partners share one representative.
std::vector<int> anchor_reps(const Gadget& g) {
    std::vector<int> rep(g.host.n(), -1);
    for (int v : g.ring) rep[v] = v;
    for (int v : g.boundary) rep[v] = v;
    for (const auto& [a, b] : g.tied) rep[a] = rep[b] = std::min(a, b);
    return rep;
}

// Stand-in for the splitting-F-path test: a recolored F-component may touch
// F-colored context at one anchor only, since each anchor could continue
// toward the reference cycle on its far side. Tied pairs count as one
// anchor (see Gadget::tied).
bool single_anchor_components(const Gadget& g, const Coloring& phi,
                              const std::vector<int>& rep) {
    const int n = g.host.n();
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (rep[s] >= 0 || !phi.is(s, 'F') || seen[s]) continue;
        int attach = -1;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            for (int v : g.host.neighbors(u)) {
                if (!phi.is(v, 'F')) continue;
                if (rep[v] >= 0) {
                    if (attach == -1)
                        attach = rep[v];
                    else if (attach != rep[v])
                        return false;
                } else if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
            }
        }
    }
    return true;
}

bool pattern_extends(const Gadget& g, const std::vector<BoundaryState>& st,
                     const std::vector<int>& rep) {
    Coloring phi(g.host.n());
    for (size_t i = 0; i < st.size(); ++i) phi.col[g.boundary[i]] = st[i].color;
    const int c = static_cast<int>(g.core.size());
    for (long long mask = 0; mask < (1LL << c); ++mask) {
        for (int j = 0; j < c; ++j) phi.col[g.core[j]] = (mask >> j) & 1 ? 'F' : 'I';
        if (coloring_valid(g.host, phi, nullptr) && single_anchor_components(g, phi, rep))
            return true;
    }
    return false;
}

ReduceResult finish_result(long long total, long long valid, long long first_bad, int b) {
    ReduceResult res;
    res.patterns_total = total;
    res.patterns_valid = valid;
    res.ok = first_bad == total;
    if (!res.ok) res.counterexample = decode_pattern(first_bad, b);
    return res;
}

} // namespace

ReduceResult verify_reducible_serial(const Gadget& g) {
    const int b = static_cast<int>(g.boundary.size());
    const long long total = pow3(b);
    const std::vector<int> rep = anchor_reps(g);
    long long valid = 0;
    long long first_bad = total;
    for (long long idx = 0; idx < total; ++idx) {
        const auto st = decode_pattern(idx, b);
        if (!pattern_consistent(g, st)) continue;
        ++valid;
        if (first_bad == total && !pattern_extends(g, st, rep)) first_bad = idx;
    }
    return finish_result(total, valid, first_bad, b);
}

ReduceResult verify_reducible(const Gadget& g) {
    const int b = static_cast<int>(g.boundary.size());
    const long long total = pow3(b);
    const std::vector<int> rep = anchor_reps(g);
    long long valid = 0;
    long long first_bad = total;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : valid) reduction(min : first_bad)
#endif
    for (long long idx = 0; idx < total; ++idx) {
        const auto st = decode_pattern(idx, b);
        if (!pattern_consistent(g, st)) continue;
        ++valid;
        if (!pattern_extends(g, st, rep) && idx < first_bad) first_bad = idx;
    }
    return finish_result(total, valid, first_bad, b);
}

// ---- structural pattern search ---------------------------------------------

namespace {

std::vector<int> distinct_verts(const PlaneGraph& G, int f) {
    std::set<int> s(G.face(f).walk.begin(), G.face(f).walk.end());
    return {s.begin(), s.end()};
}

bool simple_face(const PlaneGraph& G, int f) {
    return static_cast<int>(distinct_verts(G, f).size()) == G.face(f).degree();
}

// Edges shared by the two faces, each reported once with ascending endpoints.
std::vector<std::pair<int, int>> shared_edges(const PlaneGraph& G, int f1, int f2) {
    std::vector<std::pair<int, int>> es;
    const auto& W = G.face(f2).walk;
    const int k = static_cast<int>(W.size());
    for (int i = 0; i < k; ++i) {
        int u = W[i], v = W[(i + 1) % k];
        auto [a, b] = G.faces_of_edge(u, v);
        if ((a == f1 && b == f2) || (a == f2 && b == f1))
            es.push_back(std::minmax(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

ConfigMatch make_match(std::string id, std::vector<std::pair<std::string, int>> inj) {
    ConfigMatch m;
    m.id = std::move(id);
    m.injection = std::move(inj);
    for (const auto& [name, v] : m.injection) m.verts.push_back(v);
    std::sort(m.verts.begin(), m.verts.end());
    m.verts.erase(std::unique(m.verts.begin(), m.verts.end()), m.verts.end());
    return m;
}

// True when the subgraph induced by U is a single cycle plus exactly one
// chord whose endpoints are {x, y}.
bool cycle_plus_chord(const PlaneGraph& G, const std::vector<int>& U, int x, int y) {
    std::map<int, std::vector<int>> adj;
    int edges = 0;
    for (size_t i = 0; i < U.size(); ++i)
        for (size_t j = i + 1; j < U.size(); ++j)
            if (G.has_edge(U[i], U[j])) {
                adj[U[i]].push_back(U[j]);
                adj[U[j]].push_back(U[i]);
                ++edges;
            }
    if (edges != static_cast<int>(U.size()) + 1) return false;
    std::vector<int> deg3;
    for (int u : U) {
        const size_t d = adj[u].size();
        if (d == 3)
            deg3.push_back(u);
        else if (d != 2)
            return false;
    }
    if (deg3.size() != 2) return false;
    if (std::minmax(deg3[0], deg3[1]) != std::minmax(x, y)) return false;
    // connectivity: with the degree profile above this rules out a stray cycle
    std::set<int> seen{U[0]};
    std::deque<int> q{U[0]};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[u])
            if (seen.insert(v).second) q.push_back(v);
    }
    return seen.size() == U.size();
}

} // namespace

std::vector<ConfigMatch> find_configs(const PlaneGraph& G) {
    std::vector<ConfigMatch> out;

    for (int v = 0; v < G.n(); ++v)
        if (G.is_internal_vertex(v) && G.degree(v) <= 2)
            out.push_back(make_match("L2", {{"v", v}}));

    std::vector<char> on_short(G.n(), 0);
    for (const auto& C : enumerate_short_cycles(G, 5))
        for (int v : C.verts) on_short[v] = 1;

    const int nf = G.face_count();
    for (int f1 = 0; f1 < nf; ++f1) {
        if (G.face(f1).degree() != 6) continue;
        for (int f2 : G.adjacent_faces(f1)) {
            if (f2 == f1 || G.face(f2).degree() > 5) continue;
            const auto es = shared_edges(G, f1, f2);
            if (es.empty()) continue;
            const auto [x, y] = es.front();
            const auto v1 = distinct_verts(G, f1);
            const auto v2 = distinct_verts(G, f2);
            std::vector<int> common, uni;
            std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                                  std::back_inserter(common));
            std::set_union(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(uni));
            bool normal = es.size() == 1 && common.size() == 2 && cycle_plus_chord(G, uni, x, y);
            if (normal)
                for (int u : v1)
                    if (u != x && u != y && on_short[u]) normal = false;
            if (!normal) {
                auto m = make_match("L3", {{"x", x}, {"y", y}});
                m.verts = uni;
                out.push_back(std::move(m));
            }
        }
    }

    for (int f = 0; f < nf; ++f) {
        if (!G.is_internal_face(f) || G.face(f).degree() != 6 || !simple_face(G, f)) continue;
        const auto fv = distinct_verts(G, f);
        int v4 = -1, n3 = 0;
        for (int u : fv) {
            if (G.degree(u) == 3)
                ++n3;
            else if (G.degree(u) == 4 && v4 == -1)
                v4 = u;
        }
        if (n3 != 5 || v4 == -1) continue;
        for (int s : G.adjacent_faces(f)) {
            if (s == f || !G.is_internal_face(s) || G.face(s).degree() > 5 || !simple_face(G, s))
                continue;
            const auto sv = distinct_verts(G, s);
            bool ok = true;
            for (int u : sv)
                if (u != v4 && G.degree(u) != 3) ok = false;
            if (!ok || !std::binary_search(sv.begin(), sv.end(), v4)) continue;
            const auto es = shared_edges(G, f, s);
            if (es.size() != 1) continue;
            const auto [a, b] = es.front();
            if (a != v4 && b != v4) continue;
            const int vt = a == v4 ? b : a;
            std::vector<int> uni;
            std::set_union(fv.begin(), fv.end(), sv.begin(), sv.end(), std::back_inserter(uni));
            auto m = make_match("L4", {{"v5", v4}, {"vt", vt}});
            m.verts = uni;
            out.push_back(std::move(m));
        }
    }

    for (int s = 0; s < nf; ++s) {
        if (!G.is_internal_face(s) || G.face(s).degree() > 5 || !simple_face(G, s)) continue;
        const auto sv = distinct_verts(G, s);
        bool all3 = true;
        for (int u : sv)
            if (G.degree(u) != 3) all3 = false;
        if (!all3) continue;
        const auto& W = G.face(s).walk;
        const int k = static_cast<int>(W.size());
        for (int i = 0; i < k; ++i) {
            const int x2 = W[i], x3 = W[(i + 1) % k];
            const auto [fa, fb] = G.faces_of_edge(x2, x3);
            const int B = fa == s ? fb : fa;
            if (B == s || G.face(B).degree() < 6) continue;
            const auto& BW = G.face(B).walk;
            const int bk = static_cast<int>(BW.size());
            for (int j = 0; j < bk; ++j) {
                if (!(BW[j] == x2 && BW[(j + 1) % bk] == x3) &&
                    !(BW[j] == x3 && BW[(j + 1) % bk] == x2))
                    continue;
                const int fl_first = BW[(j - 1 + bk) % bk], fl_second = BW[(j + 2) % bk];
                const int y1 = BW[j] == x2 ? fl_first : fl_second;
                const int y4 = BW[j] == x2 ? fl_second : fl_first;
                if (y1 == y4) continue;
                if (std::binary_search(sv.begin(), sv.end(), y1) ||
                    std::binary_search(sv.begin(), sv.end(), y4))
                    continue;
                if (!G.is_internal_vertex(y1) || !G.is_internal_vertex(y4)) continue;
                if (G.degree(y1) != 3 || G.degree(y4) != 3) continue;
                auto m = make_match("L5", {{"x2", x2}, {"x3", x3}, {"y1", y1}, {"y4", y4}});
                m.verts = sv;
                m.verts.push_back(y1);
                m.verts.push_back(y4);
                std::sort(m.verts.begin(), m.verts.end());
                out.push_back(std::move(m));
            }
        }
    }

    for (int s = 0; s < nf; ++s) {
        if (!G.is_internal_face(s) || !simple_face(G, s)) continue;
        const int sdeg = G.face(s).degree();
        if (sdeg < 3 || sdeg > 5) continue;
        const int m6 = sdeg + 4;
        const auto& SW = G.face(s).walk;
        for (int i = 0; i < 2 * sdeg; ++i) {
            // orient the shared edge as (x1, x6) both ways: x7..xm continue
            // from x6 along the small face away from x1
            const bool flip = i >= sdeg;
            const int pos = i % sdeg;
            const int x1 = flip ? SW[(pos + 1) % sdeg] : SW[pos];
            const int x6 = flip ? SW[pos] : SW[(pos + 1) % sdeg];
            const auto [fa, fb] = G.faces_of_edge(x1, x6);
            const int B = fa == s ? fb : fa;
            if (B == s || !G.is_internal_face(B) || G.face(B).degree() != 6 || !simple_face(G, B))
                continue;
            std::vector<int> xs(m6 + 1, -1); // xs[1]..xs[m6]
            xs[1] = x1;
            xs[6] = x6;
            const int sd = flip ? -1 : 1;
            const int x6pos = flip ? pos : pos + 1;
            for (int step = 1; step <= sdeg - 2; ++step)
                xs[6 + step] = SW[((x6pos + sd * step) % sdeg + sdeg) % sdeg];
            const auto& BW = G.face(B).walk;
            const int bk = 6;
            int at = -1, dir = 0;
            for (int j = 0; j < bk && at == -1; ++j) {
                if (BW[j] == x6 && BW[(j + 1) % bk] == x1) at = (j + 1) % bk, dir = 1;
                else if (BW[j] == x1 && BW[(j + 1) % bk] == x6) at = j, dir = -1;
            }
            if (at == -1) continue;
            for (int step = 1; step <= 4; ++step)
                xs[1 + step] = BW[((at + dir * step) % bk + bk) % bk];
            bool ok = true;
            for (int idx2 = 1; idx2 <= m6; ++idx2) {
                if (idx2 == 2) continue;
                if (G.degree(xs[idx2]) != 3) ok = false;
            }
            if (!ok || G.degree(xs[2]) > 4) continue;
            const int xm = xs[m6];
            int third = -1;
            for (int u : G.neighbors(xm))
                if (u != xs[1] && u != xs[m6 - 1]) third = u;
            if (third == -1 || !G.is_internal_vertex(third)) continue;
            std::vector<std::pair<std::string, int>> inj;
            for (int idx2 = 1; idx2 <= m6; ++idx2)
                inj.push_back({"x" + std::to_string(idx2), xs[idx2]});
            inj.push_back({"x", third});
            out.push_back(make_match("L6", std::move(inj)));
        }
    }

    return out;
}

} // namespace ifcolor
