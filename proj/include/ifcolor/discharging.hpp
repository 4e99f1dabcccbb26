#pragma once

#include <map>
#include <string>
#include <vector>

#include "ifcolor/plane_graph.hpp"
#include "ifcolor/rational.hpp"
#include "ifcolor/reducibility.hpp"

namespace ifcolor {

// A charge carrier: one vertex or one face.
struct Element {
    enum Kind : char { VERT = 'v', FACE = 'f' };
    Kind kind;
    int id;

    friend bool operator==(const Element& a, const Element& b) {
        return a.kind == b.kind && a.id == b.id;
    }
    friend bool operator<(const Element& a, const Element& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.id < b.id;
    }
};

inline Element elem_v(int v) { return {Element::VERT, v}; }
inline Element elem_f(int f) { return {Element::FACE, f}; }
std::string elem_name(const Element& e); // "v12" / "f3"

struct Transfer {
    Element from;
    Element to;
    Rational amount;
    std::string rule; // R1a..R1g, R2, R3, R4
};

// Initial charges plus the full transfer log. Every transfer is zero-sum,
// so the final total always equals the initial total (which is 0 by Euler).
struct ChargeLedger {
    std::map<Element, Rational> initial;
    std::vector<Transfer> transfers;

    std::map<Element, Rational> final_charges() const;
    Rational final_of(const Element& e) const;
    Rational total_initial() const;
};

// Charge assignment: 2d(v) - 6 per vertex, d(f) - 6 per non-outer face,
// d(D) + 6 for the outer face. No transfers.
ChargeLedger initial_charges(const PlaneGraph& G);

// Initial charges plus every firing of the redistribution rules:
//   R1a  internal 4-vertex on a 3-face: 3/2 to each incident internal
//        3-face, 1/2 to each base
//   R1b  internal 5+-vertex on a 3-face: as R1a plus 1/2 to each incident
//        6-face
//   R1c  internal 4+-vertex on a 4-face: 2 to each incident 4-face
//   R1d  internal 4+-vertex on a 5-face: 1 to each incident 5-face
//   R1e  internal 4-vertex with a pendent internal all-3 face of length
//        <= 5: 1 to each such face, 1/2 to each incident 6-face adjacent
//        to none of them
//   R1f  internal 5+-vertex, same trigger: 2 instead of 1
//   R1g  internal 4+-vertex with neither trigger: 1/2 to each incident
//        6-face
//   R2   face of length >= 6 other than the outer face and not an internal
//        6-face: 1 to each adjacent face of length <= 5, and the remaining
//        charge (initial + R4 inflow - what R2 just sent) to the outer
//        face; zero remainders are logged as explicit no-ops
//   R3   internal 3-face: 1/2 from each adjacent internal 6-face, where an
//        all-3 3-face only collects from 6-faces holding a 4+-vertex with
//        no neighbor on the 3-face
//   R4   outer face D: receives the initial charge of every boundary
//        vertex; sends 1 to each 3-face touching the boundary and to each
//        boundary-touching 6-face adjacent to a face of length <= 5
// All amounts are derived from initial charges and static structure; rules
// fire independently wherever their guards hold.
ChargeLedger apply_rules(const PlaneGraph& G);

struct AuditEntry {
    Element element;
    Rational final_charge;
    std::vector<ConfigMatch> explains; // forbidden configurations nearby
};

struct AuditReport {
    std::vector<AuditEntry> negatives; // non-outer elements ending negative
    bool all_explained = true;
};

// Applies the rules, asserts conservation, and explains each negative
// non-outer element by a forbidden configuration intersecting its closed
// neighborhood; unexplained entries clear all_explained.
AuditReport audit(const PlaneGraph& G);

struct OuterAccounting {
    int d_D = 0;
    int tau3 = 0;        // 3-faces touching the boundary
    int tau6 = 0;        // boundary-touching 6-faces adjacent to a short face
    int e_prime = 0;     // crossing edges not on any 3-face
    Rational p;          // total R2 inflow to the outer face
    Rational mu_star_D;  // ledger final charge of the outer face
    Rational rhs;        // 6 - d(D) + 3*tau3 + 2*e_prime - tau6 + p
    bool identity = false; // mu_star_D == rhs
    bool ineq2 = false;    // 6 + 3*tau3 + 2*e_prime - tau6 + p <= d(D) <= 9
    bool ineq3 = false;    // 2*e_prime >= tau6
    bool ineq5 = false;    // e' + (e' - tau6) + p <= d(D) - 6 <= 3
    // True when some boundary-touching 6-face is adjacent to the outer face
    // as its only short face, so reading R4's short-face adjacency with or
    // without D changes the transfer set. Implemented without D.
    bool r4_distinction_matters = false;
};

// C0 must bound the outer face. The identity presumes C0 is a chordless
// simple cycle whose boundary 3-faces each use two crossing edges; the flag
// reports whether the arithmetic worked out on this instance.
OuterAccounting outer_accounting(const PlaneGraph& G, const std::vector<int>& C0);

} // namespace ifcolor
