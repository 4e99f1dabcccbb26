#include "ifcolor/discharging.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ifcolor/structures.hpp"

namespace ifcolor {

std::string elem_name(const Element& e) {
    return std::string(1, static_cast<char>(e.kind)) + std::to_string(e.id);
}

std::map<Element, Rational> ChargeLedger::final_charges() const {
    auto out = initial;
    for (const Transfer& t : transfers) {
        out[t.from] -= t.amount;
        out[t.to] += t.amount;
    }
    return out;
}

Rational ChargeLedger::final_of(const Element& e) const {
    Rational r = initial.at(e);
    for (const Transfer& t : transfers) {
        if (t.from == e) r -= t.amount;
        if (t.to == e) r += t.amount;
    }
    return r;
}

Rational ChargeLedger::total_initial() const {
    Rational s;
    for (const auto& [e, q] : initial) s += q;
    return s;
}

ChargeLedger initial_charges(const PlaneGraph& G) {
    ChargeLedger led;
    for (int v = 0; v < G.n(); ++v)
        led.initial[elem_v(v)] = Rational(2 * G.degree(v) - 6);
    for (int f = 0; f < G.face_count(); ++f)
        led.initial[elem_f(f)] = Rational(f == G.outer_face() ? G.face(f).degree() + 6
                                                              : G.face(f).degree() - 6);
    return led;
}

namespace {

bool faces_adjacent(const PlaneGraph& G, int f, int g) {
    for (int h : G.adjacent_faces(f))
        if (h == g) return true;
    return false;
}

std::vector<int> face_verts(const PlaneGraph& G, int f) {
    std::set<int> s(G.face(f).walk.begin(), G.face(f).walk.end());
    return {s.begin(), s.end()};
}

} // namespace

ChargeLedger apply_rules(const PlaneGraph& G) {
    ChargeLedger led = initial_charges(G);
    const FaceRoles roles = classify_faces(G);
    const int D = G.outer_face();
    const int nf = G.face_count();

    auto send = [&](Element from, Element to, Rational q, const char* rule) {
        led.transfers.push_back({from, to, q, rule});
    };
    auto fdeg = [&](int f) { return G.face(f).degree(); };

    std::vector<std::vector<int>> bases(G.n());
    for (auto [roof, base] : roles.roof_base) bases[roof].push_back(base);
    for (auto& b : bases) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    // candidate receivers for R1e/R1f: internal all-3 faces of length <= 5
    std::vector<int> small_all3;
    for (int f = 0; f < nf; ++f)
        if (f != D && roles.internal_face[f] && fdeg(f) <= 5 && face_all_degree3(G, f))
            small_all3.push_back(f);

    // faces the outer face pays under R4; R2 remainders need this set early
    std::set<int> r4_faces;
    for (int f = 0; f < nf; ++f) {
        if (f == D || !roles.in_F1[f]) continue;
        if (fdeg(f) == 3) {
            r4_faces.insert(f);
        } else if (fdeg(f) == 6) {
            for (int g : G.adjacent_faces(f))
                if (g != D && fdeg(g) <= 5) {
                    r4_faces.insert(f);
                    break;
                }
        }
    }

    // R1
    for (int v = 0; v < G.n(); ++v) {
        if (!G.is_internal_vertex(v) || G.degree(v) < 4) continue;
        const int d = G.degree(v);
        const std::vector<int> inc = G.faces_at_vertex(v);
        bool on3 = false, on5minus = false;
        for (int f : inc) {
            on3 |= fdeg(f) == 3;
            on5minus |= fdeg(f) <= 5;
        }
        std::vector<int> pend;
        for (int g : small_all3) {
            const auto& pv = roles.pendent_vertices[g];
            if (std::binary_search(pv.begin(), pv.end(), v)) pend.push_back(g);
        }

        if (on3) {
            const char* rule = d == 4 ? "R1a" : "R1b";
            for (int f : inc)
                if (fdeg(f) == 3 && roles.internal_face[f]) send(elem_v(v), elem_f(f), half(3), rule);
            if (d >= 5)
                for (int f : inc)
                    if (fdeg(f) == 6) send(elem_v(v), elem_f(f), half(1), rule);
            for (int b : bases[v]) send(elem_v(v), elem_f(b), half(1), rule);
        }
        for (int f : inc)
            if (fdeg(f) == 4) send(elem_v(v), elem_f(f), Rational(2), "R1c");
        for (int f : inc)
            if (fdeg(f) == 5) send(elem_v(v), elem_f(f), Rational(1), "R1d");
        if (!pend.empty()) {
            const char* rule = d == 4 ? "R1e" : "R1f";
            for (int g : pend) send(elem_v(v), elem_f(g), Rational(d == 4 ? 1 : 2), rule);
            for (int f : inc) {
                if (fdeg(f) != 6) continue;
                bool adj = false;
                for (int g : pend) adj |= faces_adjacent(G, f, g);
                if (!adj) send(elem_v(v), elem_f(f), half(1), rule);
            }
        }
        if (pend.empty() && !on5minus)
            for (int f : inc)
                if (fdeg(f) == 6) send(elem_v(v), elem_f(f), half(1), "R1g");
    }

    // R2
    for (int f = 0; f < nf; ++f) {
        if (f == D || fdeg(f) < 6) continue;
        if (fdeg(f) == 6 && roles.internal_face[f]) continue;
        Rational out;
        for (int g : G.adjacent_faces(f))
            if (g != D && fdeg(g) <= 5) {
                send(elem_f(f), elem_f(g), Rational(1), "R2");
                out += Rational(1);
            }
        Rational rem = led.initial.at(elem_f(f)) + Rational(r4_faces.count(f) ? 1 : 0) - out;
        send(elem_f(f), elem_f(D), rem, "R2"); // logged even when zero
    }

    // R3
    for (int f = 0; f < nf; ++f) {
        if (fdeg(f) != 3 || !roles.internal_face[f]) continue;
        const std::vector<int> fv = face_verts(G, f);
        std::vector<int> ds;
        for (int u : fv) ds.push_back(G.degree(u));
        std::sort(ds.begin(), ds.end());
        const bool two3_one4 = ds.size() == 3 && ds[0] == 3 && ds[1] == 3 && ds[2] >= 4;
        const bool all3 = ds.size() == 3 && ds[0] == 3 && ds[1] == 3 && ds[2] == 3;
        if (!two3_one4 && !all3) continue;
        for (int g : G.adjacent_faces(f)) {
            if (fdeg(g) != 6 || !roles.internal_face[g]) continue;
            if (two3_one4) {
                send(elem_f(g), elem_f(f), half(1), "R3");
                continue;
            }
            // all-3 face: the paying 6-face must hold a 4+-vertex with no
            // neighbor on f
            bool pays = false;
            for (int u : face_verts(G, g)) {
                if (G.degree(u) < 4) continue;
                bool touches = false;
                for (int w : G.neighbors(u))
                    touches |= std::binary_search(fv.begin(), fv.end(), w);
                if (!touches) {
                    pays = true;
                    break;
                }
            }
            if (pays) send(elem_f(g), elem_f(f), half(1), "R3");
        }
    }

    // R4
    for (int v = 0; v < G.n(); ++v)
        if (G.is_boundary_vertex(v)) send(elem_v(v), elem_f(D), led.initial.at(elem_v(v)), "R4");
    for (int f : r4_faces) send(elem_f(D), elem_f(f), Rational(1), "R4");

    return led;
}

AuditReport audit(const PlaneGraph& G) {
    ChargeLedger led = apply_rules(G);
    const auto fin = led.final_charges();
    Rational total;
    for (const auto& [e, q] : fin) total += q;
    if (!total.is_zero()) throw std::logic_error("discharging lost charge: " + total.str());

    const std::vector<ConfigMatch> configs = find_configs(G);
    const int D = G.outer_face();
    AuditReport rep;
    for (const auto& [e, q] : fin) {
        if (!q.is_negative()) continue;
        if (e.kind == Element::FACE && e.id == D) continue;
        AuditEntry ent{e, q, {}};
        std::set<int> hood;
        if (e.kind == Element::VERT) {
            hood.insert(e.id);
            for (int w : G.neighbors(e.id)) hood.insert(w);
        } else {
            for (int u : face_verts(G, e.id)) {
                hood.insert(u);
                for (int w : G.neighbors(u)) hood.insert(w);
            }
        }
        for (const ConfigMatch& cm : configs) {
            bool near = false;
            for (int u : cm.verts) near |= hood.count(u) != 0;
            if (near) ent.explains.push_back(cm);
        }
        if (ent.explains.empty()) rep.all_explained = false;
        rep.negatives.push_back(std::move(ent));
    }
    return rep;
}

OuterAccounting outer_accounting(const PlaneGraph& G, const std::vector<int>& C0) {
    G.require_cycle(C0);
    if (!cyclic_equal(G.outer_walk().walk, C0))
        throw GraphError(Errc::BAD_OUTER_FACE, "C0 does not bound the outer face");

    ChargeLedger led = apply_rules(G);
    const FaceRoles roles = classify_faces(G);
    const int D = G.outer_face();
    const int nf = G.face_count();
    auto fdeg = [&](int f) { return G.face(f).degree(); };

    OuterAccounting acc;
    acc.d_D = fdeg(D);
    for (int f = 0; f < nf; ++f) {
        if (f == D || !roles.in_F1[f]) continue;
        if (fdeg(f) == 3) ++acc.tau3;
        if (fdeg(f) == 6) {
            bool shortadj = false, only_D_short = false;
            for (int g : G.adjacent_faces(f))
                if (g != D && fdeg(g) <= 5) shortadj = true;
            if (shortadj) ++acc.tau6;
            if (!shortadj && fdeg(D) <= 5 && faces_adjacent(G, f, D)) only_D_short = true;
            acc.r4_distinction_matters |= only_D_short;
        }
    }
    for (int u = 0; u < G.n(); ++u)
        for (int v : G.neighbors(u)) {
            if (u >= v || G.is_boundary_vertex(u) == G.is_boundary_vertex(v)) continue;
            auto [f1, f2] = G.faces_of_edge(u, v);
            if (fdeg(f1) != 3 && fdeg(f2) != 3) ++acc.e_prime;
        }
    for (const Transfer& t : led.transfers)
        if (t.rule == "R2" && t.to == elem_f(D)) acc.p += t.amount;

    acc.mu_star_D = led.final_of(elem_f(D));
    acc.rhs = Rational(6 - acc.d_D + 3 * acc.tau3 + 2 * acc.e_prime - acc.tau6) + acc.p;
    acc.identity = acc.mu_star_D == acc.rhs;
    acc.ineq2 = Rational(6 + 3 * acc.tau3 + 2 * acc.e_prime - acc.tau6) + acc.p <= Rational(acc.d_D) &&
                acc.d_D <= 9;
    acc.ineq3 = 2 * acc.e_prime >= acc.tau6;
    acc.ineq5 =
        Rational(2 * acc.e_prime - acc.tau6) + acc.p <= Rational(acc.d_D - 6) && acc.d_D - 6 <= 3;
    return acc;
}

} // namespace ifcolor
