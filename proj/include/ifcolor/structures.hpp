#pragma once

#include <array>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ifcolor/plane_graph.hpp"

namespace ifcolor {

inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Canonical cycle: lexicographically least vertex sequence over all
// rotations and both directions. Stable key for dedup and golden files.
struct Cycle {
    std::vector<int> verts;
    int length() const { return static_cast<int>(verts.size()); }
    bool operator==(const Cycle&) const = default;
    bool operator<(const Cycle& o) const { return verts < o.verts; }
};

Cycle canonical_cycle(const std::vector<int>& raw);

// All distinct cycles of length <= Lmax, canonicalized, sorted.
std::vector<Cycle> enumerate_short_cycles(const PlaneGraph& G, int Lmax);

// Minimum vertex-to-vertex hop distance between two cycles (0 when they
// share a vertex).
int cycle_distance(const PlaneGraph& G, const std::vector<int>& C1, const std::vector<int>& C2);

// Minimum cycle_distance over unordered pairs of distinct 5--cycles;
// kInfDist when fewer than two exist.
int d_star(const PlaneGraph& G);

struct InClassResult {
    bool ok;
    int d_star;
    std::optional<std::pair<Cycle, Cycle>> witness; // offending pair when !ok
};

// The graph class of interest: 5--cycles pairwise at distance >= 3.
InClassResult in_class(const PlaneGraph& G);

struct ChordRec {
    std::pair<int, int> edge;    // endpoints, ordered by cycle position
    std::pair<int, int> splits;  // the two sub-cycle lengths, ascending
};

struct ClawRec {
    int center;
    std::array<int, 3> attach; // by cycle position
    std::array<int, 3> parts;  // sub-cycle lengths, descending
    bool inside;
};

struct TriclawRec {
    std::array<int, 3> triangle; // off-cycle triangle, ascending ids
    std::array<int, 3> attach;   // chosen neighbors on C, by cycle position
    std::array<int, 3> parts;    // sub-cycle lengths, descending
    bool inside;
};

enum class CycleClass { GOOD, BAD_I, BAD_II, NOT_NINE };
const char* cycle_class_name(CycleClass c);

struct StructureReport {
    int length = 0;
    std::vector<ChordRec> chords;
    std::vector<ClawRec> claws;
    std::vector<TriclawRec> triclaws;
    CycleClass cls = CycleClass::GOOD;
    // one pair per the leading claw/triclaw when its shape pins them down
    std::optional<std::pair<int, int>> bad_vertices;
};

StructureReport analyze_cycle(const PlaneGraph& G, const std::vector<int>& C);

// 9-cycle with a (3,8)-chord or a (5,5,5)-claw.
bool is_special_9cycle(const PlaneGraph& G, const std::vector<int>& C);

struct FaceRoles {
    std::vector<char> internal_face; // contains no boundary vertex
    std::vector<char> in_F1;         // non-outer face meeting V(D)
    std::vector<char> special3;      // internal 3-face, at most one 4+-vertex
    std::vector<char> special6;      // internal 6-face adjacent to a special 3-face
    std::vector<char> bad;           // 6+-face in F1 sharing an edge with a 5--face
    std::vector<std::vector<int>> pendent_vertices;  // per face
    std::vector<std::pair<int, int>> roof_base;      // (roof vertex, base face)
};

FaceRoles classify_faces(const PlaneGraph& G);

// Degree multiset helpers used by several rule guards.
bool face_all_degree3(const PlaneGraph& G, int f);
int face_count_deg4plus(const PlaneGraph& G, int f);

} // namespace ifcolor
