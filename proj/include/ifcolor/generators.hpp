#pragma once

#include <cstdint>
#include <string>

#include "plane_graph.hpp"

namespace ifcolor {

// Hexagonal-lattice patch with `rows` x `cols` cells in a brick-wall layout.
// Girth 6, chordless outer face, in-class by construction.
PlaneGraph gen_hex_patch(int rows, int cols);

// Random connected simple plane graph on n vertices, grown from a small cycle
// by face subdivisions, pendant paths and chords. No class guarantee.
// Deterministic per seed.
PlaneGraph gen_random_plane(int n, std::uint64_t seed);

// Random in-class plane graph on n vertices: grown inward from a fixed outer
// cycle of length 6..9 (kept chordless), then repaired by deleting an edge of
// one of any two conflicting short cycles until the class test passes.
// Deterministic per seed.
PlaneGraph gen_random_inclass(int n, std::uint64_t seed);

// Host graph of a named gadget, e.g. "L2", "L4:9", "L5:3", "FIG2A".
PlaneGraph gen_gadget(const std::string& id);

} // namespace ifcolor
