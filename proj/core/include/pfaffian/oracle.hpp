#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pfaffian/graph.hpp"

// Exponential-time exact checks used to verify everything else. Nothing in
// here uses floating point.
namespace pfaffian::oracle {

using BigInt = boost::multiprecision::cpp_int;

struct Limits {
    int matrix_order = 24;  // largest matrix order for permanents
    int cyclomatic = 20;    // largest m - n + c for the existence search
    int circuit_vertices = 20;
    long long matchings = 1'000'000;
};

// Ryser's formula with Gray-code subset order, O(2^n * n).
// Throws SizeLimitError if the order exceeds `max_order`.
BigInt permanent(const ZeroOneMatrix &m, int max_order = Limits{}.matrix_order);

// Exact fraction-free (Bareiss) elimination.
BigInt determinant(const SignMatrix &m);

// B[a][b] = +1 if (a, b) is directed A to B, -1 if B to A, 0 if absent.
// Throws PreconditionError if the sides are unbalanced.
SignMatrix signed_biadjacency(const BipartiteGraph &graph, const Orientation &orientation);

// per(A) == |det(B)|. Graphs with no perfect matching (including unbalanced
// ones) pass trivially.
bool is_pfaffian_orientation(const BipartiteGraph &graph, const Orientation &orientation,
                             const Limits &limits = {});

// Straight from the definition: every central circuit is oddly oriented.
// Enumerates all circuits, so only for small graphs (Limits::circuit_vertices).
bool is_pfaffian_by_definition(const BipartiteGraph &graph, const Orientation &orientation,
                               const Limits &limits = {});

// All perfect matchings in lexicographic order of their (a -> b) choices.
// Throws SizeLimitError beyond Limits::matchings.
std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph &graph, const Limits &limits = {});

// Whether every perfect matching contributes the same sign to det(B);
// nullopt if there are more than `max_matchings` of them and no disagreement
// turned up among the first ones.
std::optional<bool> matching_signs_agree(const BipartiteGraph &graph, const Orientation &orientation,
                                         long long max_matchings);

// Cyclomatic number m - n + c.
int cyclomatic_number(const BipartiteGraph &graph);

// Fixes a BFS spanning forest to A-to-B and tries all 2^(m-n+c) directions
// of the remaining edges in increasing binary order; returns the first
// Pfaffian orientation. Vertex flips make the forest normalisation lossless.
// Throws SizeLimitError if m - n + c exceeds Limits::cyclomatic.
std::optional<Orientation> pfaffian_exists_bruteforce(const BipartiteGraph &graph, const Limits &limits = {});

// Edge indices of the BFS spanning forest used by pfaffian_exists_bruteforce.
std::vector<int> spanning_forest_edges(const BipartiteGraph &graph);

// Visits every directed circuit (as its arc indices) once. Throws
// SizeLimitError beyond Limits::circuit_vertices vertices.
std::vector<std::vector<int>> directed_circuits(const Digraph &digraph, const Limits &limits = {});

// Every directed circuit has odd total weight.
bool every_circuit_odd(const Digraph &digraph, const EdgeWeighting &weighting, const Limits &limits = {});

// Evenness straight from the definition: no 0/1 weighting makes every
// circuit odd. Tries all 2^arcs weightings, so only for tiny digraphs
// (at most `max_arcs` arcs, else SizeLimitError).
bool is_even_by_definition(const Digraph &digraph, int max_arcs = 20);

}  // namespace pfaffian::oracle
