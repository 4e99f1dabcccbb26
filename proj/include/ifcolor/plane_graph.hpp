#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ifcolor {

enum class Errc {
    NON_SYMMETRIC,
    DISCONNECTED,
    EULER_VIOLATION,
    BAD_OUTER_FACE,
    NOT_A_CYCLE,
    NOT_A_9CYCLE,
    PARTIAL_COLORING,
    ALREADY_COLORED,
    HYPOTHESIS_VIOLATED,
    INVALID_PRECOLORING,
    TOO_LARGE,
    BAD_PARAMS,
    UNKNOWN_ID,
    GENERATION_FAILED,
    PARSE_ERROR,
};

const char* errc_name(Errc c);

class GraphError : public std::runtime_error {
public:
    GraphError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

struct FaceWalk {
    int id = -1;
    std::vector<int> walk; // closed boundary walk; a cut edge contributes two steps
    int degree() const { return static_cast<int>(walk.size()); }
};

// Plane graph as a rotation system: rotation[v] lists the neighbors of v in
// counterclockwise order. Faces are derived by dart tracing (the dart after
// x->u continues to u->y where y precedes x in rotation[u]) and validated
// against Euler's formula, so the rotation genuinely describes a planar
// embedding. One traced face is designated as the outer face.
class PlaneGraph {
public:
    static PlaneGraph build(std::vector<std::vector<int>> rotation,
                            const std::vector<int>* outer_hint = nullptr);

    int n() const { return static_cast<int>(rotation_.size()); }
    int m() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const std::vector<int>& neighbors(int v) const { return rotation_[v]; }
    bool has_edge(int u, int v) const { return pos_.count(dart_key(u, v)) != 0; }

    const std::vector<FaceWalk>& faces() const { return faces_; }
    const FaceWalk& face(int f) const { return faces_[f]; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int outer_face() const { return outer_; }
    const FaceWalk& outer_walk() const { return faces_[outer_]; }
    bool outer_was_hinted() const { return outer_hinted_; }

    // Face to the left of the dart u->v in trace order.
    int face_of_dart(int u, int v) const;
    // The two sides of edge {u,v}; equal ids on a cut edge.
    std::pair<int, int> faces_of_edge(int u, int v) const;
    // Distinct faces incident with v, in first-seen rotation order.
    std::vector<int> faces_at_vertex(int v) const;
    // Distinct faces sharing at least one edge with f.
    std::vector<int> adjacent_faces(int f) const;

    bool is_boundary_vertex(int v) const { return on_outer_[v]; }
    bool is_internal_vertex(int v) const { return !on_outer_[v]; }
    bool is_internal_face(int f) const;

    // Partition of V(G) - V(C) into (inside, outside) relative to the
    // embedding, where "outside" is the side whose region contains the
    // outer face. C must be a cycle (distinct vertices, consecutive
    // adjacency including wraparound).
    std::pair<std::vector<int>, std::vector<int>> cycle_sides(const std::vector<int>& C) const;

    // True when C is a cycle of this graph.
    bool is_cycle(const std::vector<int>& C) const;
    void require_cycle(const std::vector<int>& C) const;

    // Same rotation system with a different designated outer face.
    PlaneGraph with_outer_face(const std::vector<int>& outer_walk_hint) const;
    PlaneGraph with_outer_face_id(int f) const;

    // Position of v within rotation[u].
    int rot_pos(int u, int v) const;

private:
    PlaneGraph() = default;
    void trace_faces();
    void pick_outer(const std::vector<int>* hint);
    void finish_outer();

    static std::int64_t dart_key(int u, int v) {
        return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    std::vector<std::vector<int>> rotation_;
    std::unordered_map<std::int64_t, int> pos_; // (u,v) -> index of v in rotation_[u]
    std::vector<int> dart_face_;                // dart index -> face id
    std::vector<int> dart_offset_;              // per-vertex base into dart_face_
    std::vector<FaceWalk> faces_;
    std::vector<char> on_outer_;
    int edge_count_ = 0;
    int outer_ = -1;
    bool outer_hinted_ = false;
};

// BFS hop distances from a set of sources; -1 for unreachable.
std::vector<int> bfs_distances(const PlaneGraph& G, const std::vector<int>& sources);

// True when the two vertex walks are equal as cyclic sequences, allowing reflection.
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b);

// Incremental construction of a rotation system by face surgery. Starts from
// a chordless cycle 0..k-1 whose "outer" side stays untouched, so the base
// cycle remains the designated outer face of the built graph.
class PlaneBuilder {
public:
    explicit PlaneBuilder(int cycle_len);

    int n() const { return static_cast<int>(rotation_.size()); }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }

    // All current faces except the outer side of the base cycle.
    std::vector<std::vector<int>> inner_faces() const;

    // Splits the face (given as a traced walk) by a path of `len` new vertices
    // joining walk[i] to walk[j]; len = 0 inserts a plain chord. Returns the
    // ids of the new vertices in path order.
    std::vector<int> insert_path(const std::vector<int>& walk, int i, int j, int len);

    // Hangs a pendant path of `len` new vertices off walk[i] into that face.
    std::vector<int> attach_path(const std::vector<int>& walk, int i, int len);

    // Removes an edge (used by generator repair); caller keeps the graph connected.
    void remove_edge(int u, int v);

    PlaneGraph build() const;

    const std::vector<int>& base_cycle() const { return base_; }

private:
    void insert_before(int at, int before_neighbor, int added);
    std::vector<int> base_;
    std::vector<std::vector<int>> rotation_;
};

// Rotation system from a straight-line drawing: neighbors sorted by angle.
// The drawing must be planar; validation happens in PlaneGraph::build.
PlaneGraph build_from_points(const std::vector<std::pair<double, double>>& pts,
                             const std::vector<std::pair<int, int>>& edges,
                             const std::vector<int>* outer_hint = nullptr);

} // namespace ifcolor
