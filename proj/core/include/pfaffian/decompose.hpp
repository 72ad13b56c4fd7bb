#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "pfaffian/graph.hpp"

namespace pfaffian {

// G is the 2-sum of `first` and `second` along e = (u1, u2). With X the chosen
// set of A-vertices and Y1 their partners, `first` spans X + Y1 + {u1, u2} and
// `second` spans the rest plus {u1, u2}. In `first`, u1 stands in for the
// whole second side, so u1 gains an edge to every y in Y1 adjacent to that
// side; symmetrically u2 in `second`. Piece maps point into the split graph.
struct TwoSumSplit {
    Edge e;
    std::vector<int> x;  // the set X, parent A indices
    MappedGraph first;
    MappedGraph second;
    Matching first_matching;   // working matching restricted to the piece
    Matching second_matching;
    std::vector<Edge> first_added;  // local to `first`
    std::vector<Edge> second_added;  // local to `second`
};

// Empty if e is not reducing. Otherwise the chain of splits along e: the
// first split is of `graph`, and each later split is of the previous split's
// `second` piece. Every `first` piece has e non-reducing.
// Throws PreconditionError if `pm` is not a perfect matching of `graph`, e is
// not in `pm`, or `graph` is not connected and 1-extendable.
std::vector<TwoSumSplit> reducing_edge_splits(const BipartiteGraph &graph, const Matching &pm, const Edge &e);

// A node of the brace decomposition. `piece` maps into the decomposed graph.
struct BraceDecomposition {
    MappedGraph piece;
    Matching matching;  // local to piece.graph
    std::optional<TwoSumSplit> split;
    std::vector<BraceDecomposition> children;  // {first, second} when split

    bool is_leaf() const { return !split.has_value(); }
    // Leaves in left-to-right order.
    std::vector<const BraceDecomposition *> leaves() const;
};

// Splits along the matching edges in order of their A-ends. Every leaf is a
// brace. Throws PreconditionError unless `graph` is connected and
// 1-extendable with perfect matching `pm`.
BraceDecomposition decompose_into_braces(const BipartiteGraph &graph, const Matching &pm);

// Four vertices, two per side, whose removal leaves at least three components.
struct Trisector {
    std::array<int, 2> a{};  // increasing
    std::array<int, 2> b{};  // increasing

    auto operator<=>(const Trisector &) const = default;
};

// Number of connected components of graph minus the four vertices of x.
int components_without(const BipartiteGraph &graph, const Trisector &x);

// All trisectors in increasing (a0, a1, b0, b1) order, by exhaustive scan.
// Throws PreconditionError if the graph is not a brace.
std::vector<Trisector> enumerate_trisectors(const BipartiteGraph &graph);

// G + C is glued from three pieces along the 4-circuit C on the trisector.
// Components of G - X are sorted by (size, smallest unified vertex id); the
// pieces take the first, the second and all remaining components, each with
// X and C. Piece maps point into the split graph.
struct TrisumSplit {
    Trisector x;
    std::array<Edge, 4> circuit;  // a0-b0, a1-b0, a1-b1, a0-b1
    std::array<MappedGraph, 3> pieces;
    std::vector<Edge> deleted_circuit_edges;  // circuit edges missing from G
};

// Throws PreconditionError if x is not a trisector of the graph.
TrisumSplit trisum_split(const BipartiteGraph &graph, const Trisector &x);

enum class NodeKind { Pruned, Components, TwoSum, Trisum, Leaf };

enum class LeafKind { Brace, Planar, Heawood, NoPerfectMatching, Rejected };

enum class RejectReason { None, TooManyTrisectors, NonplanarNonHeawoodNoTrisector, EdgeBoundExceeded };

// Record of how a graph was taken apart. Vertex sets and edges are in the
// input graph's indices; contracted vertices keep the index of the vertex
// that represents them.
struct DecompositionTree {
    NodeKind kind = NodeKind::Leaf;
    std::vector<int> a_vertices;
    std::vector<int> b_vertices;
    int edge_count = 0;
    std::vector<Edge> removed_edges;   // Pruned
    std::optional<Edge> sum_edge;      // TwoSum
    std::optional<Trisector> trisector;  // Trisum
    LeafKind leaf = LeafKind::Brace;   // Leaf
    RejectReason reason = RejectReason::None;
    int trisector_count = 0;           // Leaf: trisectors found in the brace
    std::vector<DecompositionTree> children;
};

// TwoSum nodes over Brace leaves, in the indices of the decomposed graph.
DecompositionTree tree_of(const BraceDecomposition &decomposition);

const char *to_string(NodeKind kind);
const char *to_string(LeafKind kind);
const char *to_string(RejectReason reason);

}  // namespace pfaffian
