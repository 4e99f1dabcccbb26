#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifcolor/plane_graph.hpp"

namespace ifcolor {

// Partial vertex 2-coloring; 0 = uncolored.
struct Coloring {
    std::vector<char> col;
    explicit Coloring(int n = 0) : col(n, 0) {}
    bool is(int v, char c) const { return col[v] == c; }
    bool colored(int v) const { return col[v] != 0; }
    bool total() const {
        for (char c : col)
            if (!c) return false;
        return true;
    }
    int domain_size() const {
        int k = 0;
        for (char c : col) k += c != 0;
        return k;
    }
};

struct Violation {
    enum Kind { ADJACENT_I, F_CYCLE, SPLITTING_F_PATH } kind;
    std::vector<int> witness;
};
const char* violation_name(Violation::Kind k);

// ok iff the I-class is independent and the F-class induces a forest.
std::vector<Violation> verify_if(const PlaneGraph& G, const Coloring& phi);

// All minimal splitting F-paths of Q: endpoints distinct F-vertices on Q,
// interior nonempty, off Q, all F; no edge joins non-consecutive path
// vertices except possibly the two endpoints. Deduplicated under reversal.
std::vector<std::vector<int>> splitting_f_paths(const PlaneGraph& G, const std::vector<int>& Q,
                                                const Coloring& phi);

// verify_if plus absence of splitting F-paths of Q.
std::vector<Violation> verify_super(const PlaneGraph& G, const std::vector<int>& Q,
                                    const Coloring& phi);

// Assign I to each sequence vertex iff it has no I-colored neighbor at its
// turn, F otherwise.
Coloring nicely_color(const PlaneGraph& G, Coloring phi, const std::vector<int>& seq);

struct Prop1Result {
    bool ok = true;
    std::string detail; // human-readable description of the failure
};

// Nicely colors `seq` on top of `phi` and asserts that no F-cycle and no
// splitting F-path of Q through a sequence vertex appears; when `seq` is a
// path, additionally asserts the all-F elbow pattern never occurs at
// coloring time. Throws HYPOTHESIS_VIOLATED when some sequence vertex has
// three or more neighbors among earlier-known vertices.
Prop1Result check_prop1(const PlaneGraph& G, const Coloring& phi, const std::vector<int>& Q,
                        const std::vector<int>& seq);

// Exact backtracking solver; nullopt means exhaustively unsatisfiable.
std::optional<Coloring> solve_if(const PlaneGraph& G);

struct ExtendResult {
    std::optional<Coloring> coloring;
    bool c0_has_chords = false;
};

// Extends a valid precoloring of G[V(C0)] to a coloring with no I-I edge,
// no F-cycle, and no splitting F-path of C0.
ExtendResult extend_super(const PlaneGraph& G, const std::vector<int>& C0, const Coloring& phi0);

// Single-pass validity scan over a (possibly partial) coloring: no I-I edge,
// F-class induces a forest, and — when `on_q` marks a vertex set Q — no
// F-component disjoint from Q reaches two distinct F-vertices of Q. Uncolored
// vertices are invisible to all three checks.
bool coloring_valid(const PlaneGraph& G, const Coloring& phi,
                    const std::vector<char>* on_q = nullptr);

// Plain exhaustive enumeration (independent of the solver's machinery);
// TOO_LARGE beyond 24 free vertices. When `q` is non-null the splitting
// constraint for that cycle is enforced as well.
std::optional<Coloring> brute_force_if(const PlaneGraph& G,
                                       const std::vector<int>* q = nullptr,
                                       const Coloring* phi0 = nullptr);

// Number of valid total colorings by the same plain enumeration.
long long count_if_colorings(const PlaneGraph& G, const std::vector<int>* q = nullptr,
                             const Coloring* phi0 = nullptr);

// Serial twin of brute_force_if's parallel scan, kept as the reference
// implementation for the benchmark and equality tests.
std::optional<Coloring> brute_force_if_serial(const PlaneGraph& G,
                                              const std::vector<int>* q = nullptr,
                                              const Coloring* phi0 = nullptr);

} // namespace ifcolor
