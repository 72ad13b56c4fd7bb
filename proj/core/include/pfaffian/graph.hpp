#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pfaffian {

// An edge between A-vertex `a` and B-vertex `b`, both 0-based per side.
struct Edge {
    int a = 0;
    int b = 0;

    auto operator<=>(const Edge &) const = default;
};

// Simple bipartite graph with dense per-side vertex indices. Edges are kept
// sorted by (a, b), so the edge index of a graph is canonical and two graphs
// built from the same edge set in any order compare equal.
//
// Some algorithms address both sides through one "unified" id: A-vertex a is
// id a, B-vertex b is id n_a + b.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    // Throws PreconditionError on out-of-range endpoints or duplicate edges.
    BipartiteGraph(int n_a, int n_b, std::vector<Edge> edges);

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int vertex_count() const { return n_a_ + n_b_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool balanced() const { return n_a_ == n_b_; }

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int index) const { return edges_[index]; }

    // Neighbours of `a` in increasing order; the edge index of (a, b_k) is
    // first_edge_of_a(a) + k.
    std::span<const int> a_neighbors(int a) const;
    int first_edge_of_a(int a) const { return a_offset_[a]; }
    // Neighbours of `b` in increasing order, with the matching edge indices.
    std::span<const int> b_neighbors(int b) const { return b_adj_[b]; }
    std::span<const int> b_edge_indices(int b) const { return b_adj_edges_[b]; }

    int a_degree(int a) const { return a_offset_[a + 1] - a_offset_[a]; }
    int b_degree(int b) const { return static_cast<int>(b_adj_[b].size()); }

    std::optional<int> edge_index(int a, int b) const;
    bool has_edge(int a, int b) const { return edge_index(a, b).has_value(); }

    int unified_b(int b) const { return n_a_ + b; }
    bool is_a(int vertex) const { return vertex < n_a_; }
    // Neighbours of a unified vertex, as unified ids.
    std::vector<int> unified_neighbors(int vertex) const;

    friend bool operator==(const BipartiteGraph &x, const BipartiteGraph &y) {
        return x.n_a_ == y.n_a_ && x.n_b_ == y.n_b_ && x.edges_ == y.edges_;
    }

private:
    int n_a_ = 0;
    int n_b_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> a_offset_{0};
    std::vector<int> a_adj_;
    std::vector<std::vector<int>> b_adj_;
    std::vector<std::vector<int>> b_adj_edges_;
};

// A subgraph (or derived graph) together with the index maps of its vertices
// back into a parent graph: a_map[local a] = parent a, likewise for B.
struct MappedGraph {
    BipartiteGraph graph;
    std::vector<int> a_map;
    std::vector<int> b_map;
};

enum class Direction : std::uint8_t { AtoB, BtoA };

inline Direction reversed(Direction d) { return d == Direction::AtoB ? Direction::BtoA : Direction::AtoB; }

// One direction per edge of an associated graph, indexed by edge index.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::vector<Direction> directions) : dirs_(std::move(directions)) {}

    static Orientation uniform(const BipartiteGraph &graph, Direction d) {
        return Orientation(std::vector<Direction>(graph.edge_count(), d));
    }

    int size() const { return static_cast<int>(dirs_.size()); }
    bool fits(const BipartiteGraph &graph) const { return size() == graph.edge_count(); }

    Direction operator[](int edge) const { return dirs_[edge]; }
    void set(int edge, Direction d) { dirs_[edge] = d; }
    // +1 for AtoB, -1 for BtoA: the entry of the signed biadjacency matrix.
    int sign(int edge) const { return dirs_[edge] == Direction::AtoB ? 1 : -1; }

    const std::vector<Direction> &directions() const { return dirs_; }

    friend bool operator==(const Orientation &, const Orientation &) = default;

private:
    std::vector<Direction> dirs_;
};

class VertexSet {
public:
    VertexSet() = default;
    VertexSet(int n_a, int n_b) : a_(n_a, false), b_(n_b, false) {}
    explicit VertexSet(const BipartiteGraph &graph) : VertexSet(graph.n_a(), graph.n_b()) {}

    void insert_a(int a) { a_[a] = true; }
    void insert_b(int b) { b_[b] = true; }
    bool has_a(int a) const { return a_[a]; }
    bool has_b(int b) const { return b_[b]; }
    bool empty() const;

    VertexSet complement() const;

private:
    std::vector<bool> a_;
    std::vector<bool> b_;
};

// Reverses every edge with exactly one end in `flipped`.
Orientation flip_vertices(const BipartiteGraph &graph, const Orientation &orientation, const VertexSet &flipped);

// A set of pairwise disjoint edges, stored sorted.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    const std::vector<Edge> &edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool contains(const Edge &e) const;

    // Every edge exists in `graph` and no two share an end.
    bool is_matching_in(const BipartiteGraph &graph) const;
    bool is_perfect_in(const BipartiteGraph &graph) const;

    // mate_of_a()[a] is the B-partner of a, or -1.
    std::vector<int> mate_of_a(int n_a) const;
    std::vector<int> mate_of_b(int n_b) const;

    friend bool operator==(const Matching &, const Matching &) = default;

private:
    std::vector<Edge> edges_;
};

struct Arc {
    int tail = 0;
    int head = 0;

    auto operator<=>(const Arc &) const = default;
};

// Simple digraph: no loops, at most one arc per ordered pair (2-cycles allowed).
// Arcs are kept sorted, which fixes arc indices.
class Digraph {
public:
    Digraph() = default;
    // Throws PreconditionError on loops, duplicates or out-of-range ends.
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc> &arcs() const { return arcs_; }
    const Arc &arc(int index) const { return arcs_[index]; }

    std::span<const int> successors(int v) const;
    int first_arc_of(int v) const { return offset_[v]; }
    std::optional<int> arc_index(int tail, int head) const;

    friend bool operator==(const Digraph &x, const Digraph &y) { return x.n_ == y.n_ && x.arcs_ == y.arcs_; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> offset_{0};
    std::vector<int> heads_;
};

// A {0,1} weight per arc of an associated digraph, indexed by arc index.
struct EdgeWeighting {
    std::vector<std::uint8_t> weight;
};

namespace detail {
struct ZeroOneEntries {
    static constexpr int lo = 0;
};
struct SignEntries {
    static constexpr int lo = -1;
};
}  // namespace detail

// Square integer matrix whose entries lie in [Entries::lo, 1].
template <typename Entries>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n) * n, 0) {}
    // Throws PreconditionError on ragged/non-square input or out-of-range entries.
    explicit SquareMatrix(const std::vector<std::vector<int>> &rows);

    int order() const { return n_; }
    int operator()(int r, int c) const { return v_[static_cast<std::size_t>(r) * n_ + c]; }
    void set(int r, int c, int value);

    friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;

private:
    int n_ = 0;
    std::vector<std::int8_t> v_;
};

using ZeroOneMatrix = SquareMatrix<detail::ZeroOneEntries>;
using SignMatrix = SquareMatrix<detail::SignEntries>;

ZeroOneMatrix support(const SignMatrix &m);

// Rows are A-vertices, columns B-vertices; (r, c) is an edge iff A[r][c] = 1.
BipartiteGraph graph_of_matrix(const ZeroOneMatrix &m);
// Inverse of graph_of_matrix. Throws PreconditionError if n_a != n_b.
ZeroOneMatrix matrix_of_graph(const BipartiteGraph &graph);

// One entry per connected component (isolated vertices included), ordered by
// the smallest unified vertex id in the component.
std::vector<MappedGraph> connected_components(const BipartiteGraph &graph);
bool is_connected(const BipartiteGraph &graph);

// Subgraph induced by the kept vertices; maps are increasing.
MappedGraph induced_subgraph(const BipartiteGraph &graph, const std::vector<bool> &keep_a,
                             const std::vector<bool> &keep_b);

// Lines of the Fano plane over points 0..6; every pair of points lies on exactly one line.
std::vector<std::array<int, 3>> fano_lines();
// Incidence graph of the Fano plane: A = points, B = lines.
const BipartiteGraph &heawood_graph();

// Length of a shortest circuit, or nullopt for a forest.
std::optional<int> girth(const BipartiteGraph &graph);

}  // namespace pfaffian
