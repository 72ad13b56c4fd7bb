#pragma once

#include <vector>

#include "pfaffian/graph.hpp"

namespace pfaffian {

// Maximum-cardinality matching by Hopcroft-Karp. Vertices and neighbours are
// scanned in index order, so the result is a function of the graph alone.
Matching max_matching(const BipartiteGraph &graph);

bool has_perfect_matching(const BipartiteGraph &graph);

struct PruneResult {
    BipartiteGraph kept;        // same vertex set, only edges lying in some perfect matching
    std::vector<Edge> removed;  // edges lying in no perfect matching, sorted
    Matching witness_pm;        // perfect matching of `kept`
};

// Removes every edge that lies in no perfect matching. A non-matching edge
// (a_u, b_v) lies in a perfect matching iff the arc u->v of D(G, M) lies on a
// directed circuit, i.e. iff u and v share a strong component. Linear time.
// Throws PreconditionError if `pm` is not a perfect matching of `graph`.
PruneResult prune_non_pm_edges(const BipartiteGraph &graph, const Matching &pm);

// D(G, M): direct every edge from A to B and contract the matching.
// Digraph vertex v stands for the matching edge (a_v, mate(a_v)), so it is
// numbered by its A-end. Each non-matching edge (a_u, b) with b matched to a_v
// becomes the arc u->v; a simple graph never produces two edges for one arc.
struct DigraphImage {
    Digraph digraph;
    std::vector<int> vertex_a;  // A-end of the matching edge of each digraph vertex
    std::vector<int> vertex_b;  // B-end of the matching edge of each digraph vertex
    std::vector<int> arc_edge;  // graph edge index per arc index
};

DigraphImage digraph_of(const BipartiteGraph &graph, const Matching &pm);

// Whether the digraph stays strongly connected after deleting `removed`
// (pass -1 to delete nothing). The empty digraph counts as strongly connected.
bool strongly_connected_without(const Digraph &digraph, int removed);

// k-extendability for k in {1, 2} via strong k-connectivity of D(G, M).
// A brace is a 2-extendable graph. Throws PreconditionError if the graph is
// disconnected, has no perfect matching, or k is not 1 or 2.
bool is_k_extendable(const BipartiteGraph &graph, int k);

inline bool is_brace(const BipartiteGraph &graph) { return is_k_extendable(graph, 2); }

}  // namespace pfaffian
