#pragma once

#include <optional>
#include <vector>

#include "pfaffian/graph.hpp"

namespace pfaffian {

// An edge traversed from unified vertex `from` to its other end.
struct Dart {
    int edge = 0;
    int from = 0;
};

// Combinatorial embedding: a rotation (cyclic order of incident edges) per
// unified vertex, and the faces it induces. Every dart lies on exactly one
// face, and each connected component with c_v vertices, c_e edges and c_f
// faces satisfies c_v - c_e + c_f = 2.
struct Embedding {
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<Dart>> faces;
    std::vector<int> face_component;  // component label of each face
    std::vector<int> outer_face;      // per component with edges: the face treated as unbounded
    int component_count = 0;          // including isolated vertices

    // Faces of the whole plane drawing: components share one unbounded face.
    int plane_face_count() const;
};

// Either an embedding or nullopt when the graph is not planar.
std::optional<Embedding> planar_embed(const BipartiteGraph &graph);

// Whether traversing `dart` agrees with the edge direction.
bool dart_is_forward(const BipartiteGraph &graph, const Orientation &orientation, const Dart &dart);

// Kasteleyn orientation: every bounded face (all faces except each component's
// outer face) has an odd number of forward darts. Handles each component
// separately. Spanning-forest edges are A to B; the remaining edges are fixed
// face by face from the leaves of the dual tree towards the outer face.
Orientation fkt_orientation(const BipartiteGraph &graph, const Embedding &embedding);

// Forward-dart count of every face, for checking the face parity directly.
std::vector<int> face_forward_counts(const BipartiteGraph &graph, const Embedding &embedding,
                                     const Orientation &orientation);

// Vertex correspondence with the canonical Heawood graph (Fano points on the
// A side, lines on the B side).
struct HeawoodIsomorphism {
    std::vector<int> a_to_point;
    std::vector<int> b_to_line;
};

// Exact isomorphism test: cheap invariants first (order, size, 3-regularity,
// connectivity, girth 6), then backtracking over the A side.
std::optional<HeawoodIsomorphism> is_heawood(const BipartiteGraph &graph);

// All edges A to B. Throws PreconditionError unless the graph is Heawood.
Orientation heawood_orientation(const BipartiteGraph &graph);

}  // namespace pfaffian
