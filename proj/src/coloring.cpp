#include "ifcolor/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <deque>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ifcolor {

const char* violation_name(Violation::Kind k) {
    switch (k) {
    case Violation::ADJACENT_I: return "ADJACENT_I";
    case Violation::F_CYCLE: return "F_CYCLE";
    case Violation::SPLITTING_F_PATH: return "SPLITTING_F_PATH";
    }
    return "?";
}

namespace {

void require_total(const PlaneGraph& G, const Coloring& phi) {
    if ((int)phi.col.size() != G.n() || !phi.total())
        throw GraphError(Errc::PARTIAL_COLORING, "coloring does not cover V(G)");
}

// one F-cycle witness per cyclic component of the F-subgraph
void collect_f_cycles(const PlaneGraph& G, const Coloring& phi, std::vector<Violation>& out) {
    const int n = G.n();
    std::vector<char> vis(n, 0);
    std::vector<int> parent(n, -2), depth(n, -1);
    for (int s = 0; s < n; ++s) {
        if (!phi.is(s, 'F') || vis[s]) continue;
        // whole component first, so no later root can land inside it
        std::deque<int> q{s};
        vis[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : G.neighbors(u))
                if (phi.is(w, 'F') && !vis[w]) {
                    vis[w] = 1;
                    q.push_back(w);
                }
        }
        // DFS from s; the first non-tree edge closes a cycle through the
        // meeting point of the two parent chains
        parent[s] = -1;
        depth[s] = 0;
        std::vector<int> stack{s};
        bool reported = false;
        while (!stack.empty() && !reported) {
            int u = stack.back();
            stack.pop_back();
            for (int w : G.neighbors(u)) {
                if (!phi.is(w, 'F') || w == parent[u]) continue;
                if (parent[w] == -2) {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    stack.push_back(w);
                } else if (!reported) {
                    std::vector<int> pu, pw;
                    int a = u, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            pu.push_back(a);
                            a = parent[a];
                        } else {
                            pw.push_back(b);
                            b = parent[b];
                        }
                    }
                    pu.push_back(a);
                    std::reverse(pw.begin(), pw.end());
                    pu.insert(pu.end(), pw.begin(), pw.end());
                    if (pu.size() >= 3) {
                        out.push_back({Violation::F_CYCLE, pu});
                        reported = true;
                    }
                }
            }
        }
    }
}

bool path_has_shortcut(const PlaneGraph& G, const std::vector<int>& p) {
    const int m = (int)p.size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue; // endpoint chord allowed
            if (G.has_edge(p[i], p[j])) return true;
        }
    return false;
}

std::vector<std::vector<int>> splitting_paths_impl(const PlaneGraph& G, const std::vector<int>& Q,
                                                   const Coloring& phi, bool minimal_only) {
    G.require_cycle(Q);
    std::vector<char> onQ(G.n(), 0);
    for (int v : Q) onQ[v] = 1;
    std::set<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(G.n(), 0);
    auto emit = [&](std::vector<int> p) {
        std::vector<int> r(p.rbegin(), p.rend());
        out.insert(std::min(p, r));
    };
    auto dfs = [&](auto&& self) -> void {
        int u = path.back();
        for (int w : G.neighbors(u)) {
            if (!phi.is(w, 'F') || used[w]) continue;
            if (onQ[w]) {
                if (w != path.front() && path.size() >= 2) {
                    path.push_back(w);
                    if (!minimal_only || !path_has_shortcut(G, path)) emit(path);
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
    return {out.begin(), out.end()};
}

// cycles of the induced F-subgraph, exhaustively (for the property checker)
std::set<std::vector<int>> all_f_cycles(const PlaneGraph& G, const Coloring& phi) {
    std::set<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(G.n(), 0);
    auto canon = [](const std::vector<int>& raw) {
        const int k = (int)raw.size();
        std::vector<int> best;
        for (int refl = 0; refl < 2; ++refl) {
            std::vector<int> seq = raw;
            if (refl) std::reverse(seq.begin(), seq.end());
            for (int s = 0; s < k; ++s) {
                std::vector<int> cand(k);
                for (int i = 0; i < k; ++i) cand[i] = seq[(s + i) % k];
                if (best.empty() || cand < best) best = std::move(cand);
            }
        }
        return best;
    };
    auto dfs = [&](auto&& self, int v) -> void {
        for (int w : G.neighbors(v)) {
            if (!phi.is(w, 'F')) continue;
            if (w == path.front() && path.size() >= 3) out.insert(canon(path));
            if (w <= path.front() || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int r = 0; r < G.n(); ++r) {
        if (!phi.is(r, 'F')) continue;
        path = {r};
        std::fill(used.begin(), used.end(), 0);
        used[r] = 1;
        dfs(dfs, r);
    }
    return out;
}

} // namespace

std::vector<Violation> verify_if(const PlaneGraph& G, const Coloring& phi) {
    require_total(G, phi);
    std::vector<Violation> out;
    for (int u = 0; u < G.n(); ++u)
        for (int v : G.neighbors(u))
            if (u < v && phi.is(u, 'I') && phi.is(v, 'I'))
                out.push_back({Violation::ADJACENT_I, {u, v}});
    collect_f_cycles(G, phi, out);
    return out;
}

std::vector<std::vector<int>> splitting_f_paths(const PlaneGraph& G, const std::vector<int>& Q,
                                                const Coloring& phi) {
    require_total(G, phi);
    return splitting_paths_impl(G, Q, phi, true);
}

std::vector<Violation> verify_super(const PlaneGraph& G, const std::vector<int>& Q,
                                    const Coloring& phi) {
    std::vector<Violation> out = verify_if(G, phi);
    for (auto& p : splitting_paths_impl(G, Q, phi, true))
        out.push_back({Violation::SPLITTING_F_PATH, p});
    return out;
}

Coloring nicely_color(const PlaneGraph& G, Coloring phi, const std::vector<int>& seq) {
    for (int v : seq) {
        if (phi.colored(v))
            throw GraphError(Errc::ALREADY_COLORED, "vertex " + std::to_string(v));
        bool has_I = false;
        for (int u : G.neighbors(v)) has_I = has_I || phi.is(u, 'I');
        phi.col[v] = has_I ? 'F' : 'I';
    }
    return phi;
}

Prop1Result check_prop1(const PlaneGraph& G, const Coloring& phi, const std::vector<int>& Q,
                        const std::vector<int>& seq) {
    G.require_cycle(Q);
    for (int v : Q)
        if (!phi.colored(v))
            throw GraphError(Errc::BAD_PARAMS, "Q must lie in the colored subgraph");
    std::vector<char> known(G.n(), 0);
    for (int v = 0; v < G.n(); ++v) known[v] = phi.colored(v);
    for (int v : seq) {
        int back = 0;
        for (int u : G.neighbors(v)) back += known[u];
        if (back > 2)
            throw GraphError(Errc::HYPOTHESIS_VIOLATED,
                             "vertex " + std::to_string(v) + " has " + std::to_string(back) +
                                 " earlier neighbors");
        known[v] = 1;
    }

    auto cycles_before = all_f_cycles(G, phi);
    auto paths_before_v = splitting_paths_impl(G, Q, phi, false);
    std::set<std::vector<int>> paths_before(paths_before_v.begin(), paths_before_v.end());

    bool is_path = seq.size() >= 2;
    for (size_t i = 0; i + 1 < seq.size() && is_path; ++i)
        is_path = G.has_edge(seq[i], seq[i + 1]);

    Prop1Result res;
    Coloring cur = phi;
    for (size_t t = 0; t < seq.size(); ++t) {
        int v = seq[t];
        bool has_I = false;
        for (int u : G.neighbors(v)) has_I = has_I || cur.is(u, 'I');
        char c = has_I ? 'F' : 'I';
        if (is_path && t >= 1 && c == 'F' && cur.is(seq[t - 1], 'F')) {
            for (int u : G.neighbors(v))
                if (u != seq[t - 1] && cur.is(u, 'F')) {
                    res.ok = false;
                    res.detail = "all-F elbow " + std::to_string(seq[t - 1]) + "-" +
                                 std::to_string(v) + "-" + std::to_string(u) +
                                 " at coloring time";
                }
        }
        cur.col[v] = c;
    }

    for (const auto& c : all_f_cycles(G, cur))
        if (!cycles_before.count(c)) {
            res.ok = false;
            res.detail = "new F-cycle through the sequence";
        }
    for (const auto& p : splitting_paths_impl(G, Q, cur, false))
        if (!paths_before.count(p)) {
            res.ok = false;
            res.detail = "new splitting F-path through the sequence";
        }
    return res;
}

namespace {

struct RollbackDSU {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> ops; // (child root, parent root)
    explicit RollbackDSU(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) { // false when already joined
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        ops.push_back({b, a});
        return true;
    }
    size_t mark() const { return ops.size(); }
    void rollback(size_t m) {
        while (ops.size() > m) {
            auto [c, p] = ops.back();
            ops.pop_back();
            parent[c] = c;
            size[p] -= size[c];
        }
    }
};

// Backtracking search for IF-colorings, optionally with a fixed cycle Q whose
// splitting F-paths are forbidden. F-acyclicity is maintained by a rollback
// union-find over F-vertices; the splitting constraint by a second union-find
// over off-Q F-vertices where every component may touch at most one F-colored
// vertex of Q.
class Solver {
public:
    Solver(const PlaneGraph& G, const std::vector<int>* Q)
        : G_(G), forest_(G.n()), comp_(G.n()), att_(G.n(), -1), onQ_(G.n(), 0), col_(G.n()) {
        if (Q) {
            hasQ_ = true;
            for (int v : *Q) onQ_[v] = 1;
        }
    }

    // seeds a precoloring; returns false if it already violates the forest rule
    bool seed(const Coloring& phi) {
        for (int v = 0; v < G_.n(); ++v)
            if (phi.colored(v)) col_.col[v] = phi.col[v];
        for (int v = 0; v < G_.n(); ++v) {
            if (!col_.is(v, 'F')) continue;
            for (int u : G_.neighbors(v))
                if (u < v && col_.is(u, 'F') && !forest_.unite(u, v)) return false;
        }
        return true;
    }

    std::optional<Coloring> run(const std::vector<int>& order) {
        order_ = order;
        if (dfs(0)) return col_;
        return std::nullopt;
    }

private:
    bool assign_F(int v) {
        for (int u : G_.neighbors(v))
            if (col_.is(u, 'F') && !forest_.unite(u, v)) return false;
        if (hasQ_ && !onQ_[v]) {
            for (int u : G_.neighbors(v)) {
                if (!col_.is(u, 'F') || onQ_[u]) continue;
                int ra = comp_.find(v), rb = comp_.find(u);
                if (ra == rb) continue; // forest check already admitted this edge
                int aa = att_[ra], ab = att_[rb];
                if (aa != -1 && ab != -1 && aa != ab) return false;
                comp_.unite(ra, rb);
                int r = comp_.find(ra);
                int merged = aa != -1 ? aa : ab;
                if (att_[r] != merged) {
                    att_ops_.push_back({r, att_[r]});
                    att_[r] = merged;
                }
            }
            for (int u : G_.neighbors(v)) {
                if (!col_.is(u, 'F') || !onQ_[u]) continue;
                int r = comp_.find(v);
                if (att_[r] == u) continue;
                if (att_[r] != -1) return false;
                att_ops_.push_back({r, att_[r]});
                att_[r] = u;
            }
        }
        return true;
    }

    void rollback(size_t fm, size_t cm, size_t am) {
        forest_.rollback(fm);
        comp_.rollback(cm);
        while (att_ops_.size() > am) {
            auto [i, old] = att_ops_.back();
            att_ops_.pop_back();
            att_[i] = old;
        }
    }

    bool dfs(size_t idx) {
        if (idx == order_.size()) return true;
        int v = order_[idx];
        bool i_ok = true;
        for (int u : G_.neighbors(v)) i_ok = i_ok && !col_.is(u, 'I');
        if (i_ok) {
            col_.col[v] = 'I';
            if (dfs(idx + 1)) return true;
            col_.col[v] = 0;
        }
        size_t fm = forest_.mark(), cm = comp_.mark(), am = att_ops_.size();
        col_.col[v] = 'F';
        if (assign_F(v) && dfs(idx + 1)) return true;
        rollback(fm, cm, am);
        col_.col[v] = 0;
        return false;
    }

    const PlaneGraph& G_;
    RollbackDSU forest_, comp_;
    std::vector<int> att_;
    std::vector<std::pair<int, int>> att_ops_;
    std::vector<char> onQ_;
    Coloring col_;
    std::vector<int> order_;
    bool hasQ_ = false;
};

std::vector<int> search_order(const PlaneGraph& G, const std::vector<int>& sources,
                              const std::vector<char>& skip) {
    auto dist = bfs_distances(G, sources);
    std::vector<int> order;
    for (int v = 0; v < G.n(); ++v)
        if (!skip[v]) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
    return order;
}

} // namespace

std::optional<Coloring> solve_if(const PlaneGraph& G) {
    Solver s(G, nullptr);
    std::vector<char> skip(G.n(), 0);
    return s.run(search_order(G, {0}, skip));
}

ExtendResult extend_super(const PlaneGraph& G, const std::vector<int>& C0, const Coloring& phi0) {
    G.require_cycle(C0);
    std::vector<char> onC(G.n(), 0);
    for (int v : C0) onC[v] = 1;
    for (int v = 0; v < G.n(); ++v)
        if (phi0.colored(v) != (bool)onC[v])
            throw GraphError(Errc::INVALID_PRECOLORING,
                             "precoloring domain must be exactly V(C0)");

    ExtendResult res;
    for (int i = 0; i < (int)C0.size(); ++i) {
        int u = C0[i];
        for (int w : G.neighbors(u)) {
            if (!onC[w]) continue;
            if (w != C0[(i + 1) % C0.size()] && w != C0[(i - 1 + C0.size()) % C0.size()])
                res.c0_has_chords = true;
            if (phi0.is(u, 'I') && phi0.is(w, 'I'))
                throw GraphError(Errc::INVALID_PRECOLORING, "adjacent I-I pair on C0");
        }
    }

    Solver s(G, &C0);
    if (!s.seed(phi0)) // an all-F cycle inside G[V(C0)]
        throw GraphError(Errc::INVALID_PRECOLORING, "F-cycle inside G[V(C0)]");
    res.coloring = s.run(search_order(G, C0, onC));
    return res;
}

// plain validity scan; also the workhorse behind the exhaustive reference and
// the gadget verifier
bool coloring_valid(const PlaneGraph& G, const Coloring& phi, const std::vector<char>* onQ) {
    const int n = G.n();
    for (int u = 0; u < n; ++u)
        if (phi.is(u, 'I'))
            for (int v : G.neighbors(u))
                if (u < v && phi.is(v, 'I')) return false;
    // forest check by counting: acyclic iff every F-component has |E| = |V|-1
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (!phi.is(s, 'F') || seen[s]) continue;
        int nv = 0, nd = 0;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            ++nv;
            for (int v : G.neighbors(u)) {
                if (!phi.is(v, 'F')) continue;
                ++nd;
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
            }
        }
        if (nd != 2 * (nv - 1)) return false;
    }
    if (onQ) {
        // splitting path exists iff some off-Q F-component touches two
        // distinct F-colored Q-vertices
        std::fill(seen.begin(), seen.end(), 0);
        for (int s = 0; s < n; ++s) {
            if ((*onQ)[s] || !phi.is(s, 'F') || seen[s]) continue;
            int attach = -1;
            std::deque<int> q{s};
            seen[s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v : G.neighbors(u)) {
                    if (!phi.is(v, 'F')) continue;
                    if ((*onQ)[v]) {
                        if (attach == -1)
                            attach = v;
                        else if (attach != v)
                            return false;
                    } else if (!seen[v]) {
                        seen[v] = 1;
                        q.push_back(v);
                    }
                }
            }
        }
    }
    return true;
}

namespace {

struct BruteSetup {
    std::vector<int> free;
    Coloring base;
    std::optional<std::vector<char>> onQ;
};

BruteSetup brute_setup(const PlaneGraph& G, const std::vector<int>* q, const Coloring* phi0) {
    BruteSetup s{{}, Coloring(G.n()), std::nullopt};
    if (phi0) s.base = *phi0;
    if (q) {
        G.require_cycle(*q);
        std::vector<char> onQ(G.n(), 0);
        for (int v : *q) onQ[v] = 1;
        s.onQ = std::move(onQ);
    }
    for (int v = 0; v < G.n(); ++v)
        if (!s.base.colored(v)) s.free.push_back(v);
    if (s.free.size() > 24)
        throw GraphError(Errc::TOO_LARGE,
                         std::to_string(s.free.size()) + " free vertices (cap 24)");
    return s;
}

Coloring apply_mask(const BruteSetup& s, long long mask) {
    Coloring phi = s.base;
    for (size_t b = 0; b < s.free.size(); ++b)
        phi.col[s.free[b]] = (mask >> b) & 1 ? 'F' : 'I';
    return phi;
}

} // namespace

std::optional<Coloring> brute_force_if_serial(const PlaneGraph& G, const std::vector<int>* q,
                                              const Coloring* phi0) {
    BruteSetup s = brute_setup(G, q, phi0);
    const std::vector<char>* onQ = s.onQ ? &*s.onQ : nullptr;
    const long long total = 1LL << s.free.size();
    for (long long mask = 0; mask < total; ++mask) {
        Coloring phi = apply_mask(s, mask);
        if (coloring_valid(G, phi, onQ)) return phi;
    }
    return std::nullopt;
}

std::optional<Coloring> brute_force_if(const PlaneGraph& G, const std::vector<int>* q,
                                       const Coloring* phi0) {
    BruteSetup s = brute_setup(G, q, phi0);
    const std::vector<char>* onQ = s.onQ ? &*s.onQ : nullptr;
    const long long total = 1LL << s.free.size();
    long long best = LLONG_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
    for (long long mask = 0; mask < total; ++mask) {
        if (mask < best) {
            Coloring phi = apply_mask(s, mask);
            if (coloring_valid(G, phi, onQ) && mask < best) best = mask;
        }
    }
    if (best == LLONG_MAX) return std::nullopt;
    return apply_mask(s, best);
}

long long count_if_colorings(const PlaneGraph& G, const std::vector<int>* q,
                             const Coloring* phi0) {
    BruteSetup s = brute_setup(G, q, phi0);
    const std::vector<char>* onQ = s.onQ ? &*s.onQ : nullptr;
    const long long total = 1LL << s.free.size();
    long long count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
    for (long long mask = 0; mask < total; ++mask) {
        Coloring phi = apply_mask(s, mask);
        if (coloring_valid(G, phi, onQ)) ++count;
    }
    return count;
}

} // namespace ifcolor
