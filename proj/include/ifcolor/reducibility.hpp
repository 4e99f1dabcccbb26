#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ifcolor/coloring.hpp"
#include "ifcolor/plane_graph.hpp"

namespace ifcolor {

// State of one boundary vertex in an enumerated context pattern. The flag
// abstracts the part of the host we cut away: it records whether the vertex
// would see an I-colored neighbor out there. (I, true) is not a state --
// that would be an I-I edge on the far side.
struct BoundaryState {
    char color = 'F'; // 'I' or 'F'
    bool outside_I = false;
};

// A configuration graph embedded in a minimal padded host. `ring` is the
// outer cycle standing for the precolored reference cycle; `boundary` lists
// the context vertices whose colors are enumerated (most sit on the ring,
// L6 adds one just inside); `core` is recolored by the extension search.
// Padding vertices stay uncolored throughout.
struct Gadget {
    PlaneGraph host;
    std::vector<int> ring;
    std::vector<int> core;
    std::vector<int> boundary;
    // Pairs of boundary vertices pinned to a common color. The deletion
    // argument that supplies the context coloring merges each pair into one
    // vertex before coloring and pulls the colors back, so patterns giving
    // them different colors never arise, and an F-path through the core
    // between the two cannot lie on a barrier (it would close up to a
    // barrier or an F-cycle in the merged graph).
    std::vector<std::pair<int, int>> tied;
    std::string id;
};

// Known ids: L2, L4:7..L4:9, L5:3..L5:5, L6:7..L6:9, and the fixed
// structures FIG2A, FIG2B, FIG3A, FIG3B. Unknown ids raise UNKNOWN_ID;
// L3 has no gadget form and raises BAD_PARAMS.
Gadget build_gadget(const std::string& id);

struct ReduceResult {
    bool ok = false;
    long long patterns_total = 0; // 3^|boundary|
    long long patterns_valid = 0; // patterns with no I-I edge and tied pairs agreeing
    // Lowest-index unextendable pattern, one state per boundary vertex.
    std::optional<std::vector<BoundaryState>> counterexample;
};

// Checks that every valid context pattern on the boundary extends to the
// core with no I-I edge, no F-cycle, and no F-path through the core joining
// two distinct context anchors (ring or boundary vertices, tied pairs
// counting as one anchor) -- the finite stand-in for "no splitting F-path
// of the reference cycle". The parallel scan and the serial twin report
// identical results.
ReduceResult verify_reducible(const Gadget& g);
ReduceResult verify_reducible_serial(const Gadget& g);

// One located occurrence of a forbidden configuration.
struct ConfigMatch {
    std::string id;                                      // L2, L3, L4, L5, L6
    std::vector<std::pair<std::string, int>> injection;  // pattern name -> host vertex
    std::vector<int> verts;                              // image of the injection, sorted
};

// Direct structural search for all occurrences of the forbidden patterns:
//   L2  internal vertex of degree <= 2
//   L3  a 6-face and a face of length <= 5 sharing an edge abnormally
//       (more than one shared edge or vertex beyond the shared pair,
//       induced union not a cycle with a unique chord, or a flank vertex
//       on a cycle of length <= 5)
//   L4  internal (3,3,3,3,3,4)-face sharing its (3,4)-edge with an internal
//       face of length <= 5 whose vertices are all 3-vertices except that
//       4-vertex
//   L5  internal face of length <= 5 with all 3-vertices next to a 6+-face
//       whose two flank vertices are both internal 3-vertices
//   L6  internal face of length <= 5 plus an internal 6-face sharing an
//       edge, every vertex of degree 3 except the second 6-face vertex of
//       degree <= 4, and the far small-face corner having an internal
//       third neighbor
std::vector<ConfigMatch> find_configs(const PlaneGraph& G);

} // namespace ifcolor
