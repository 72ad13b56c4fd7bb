#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pfaffian/decompose.hpp"
#include "pfaffian/graph.hpp"

namespace pfaffian {

struct PipelineOptions {
    // Every 2-sum splice is checked against all perfect matchings of the
    // spliced graph when it has at most this many; 0 disables the check.
    long long splice_check_matchings = 1'000'000;
};

// Yes carries an orientation of every edge of the input. No carries the
// reason of the rejected leaf; `failed_path` lists child indices from the
// root of `tree` down to it (empty when the root itself was rejected).
struct PfaffianVerdict {
    std::optional<Orientation> orientation;
    DecompositionTree tree;
    RejectReason reason = RejectReason::None;
    std::vector<int> failed_path;

    bool yes() const { return orientation.has_value(); }
    bool piece_failed() const { return !yes() && !failed_path.empty(); }
};

// Decides a brace given its trisectors. Rejects when there are more than
// n - 5 of them (only when there is at least one); otherwise a brace without
// trisectors is planar (Kasteleyn), Heawood, or rejected, and a brace with
// trisectors is split at the smallest one and solved piece by piece.
// Throws PreconditionError if some listed set is not a trisector.
PfaffianVerdict brace_pfaffian(const BipartiteGraph &brace, const std::vector<Trisector> &trisectors);

// Rejects braces on at least three vertices with more than 2n - 4 edges,
// then calls brace_pfaffian. Throws PreconditionError if not a brace.
PfaffianVerdict brace_entry(const BipartiteGraph &brace);

// The full decision procedure for any bipartite graph.
PfaffianVerdict pfaffian_orientation(const BipartiteGraph &graph, const PipelineOptions &options = {});

// Flips `moving` at a subset of the circuit's four vertices so that it agrees
// with `fixed` on the circuit. Circuits are given position by position as
// edges of the respective graphs. Subsets are tried in increasing bitmask
// order over (a0, a1, b0, b1), so an already agreeing orientation comes back
// unchanged. Throws PreconditionError if no subset works, which happens
// exactly when the two circuit orientations have different parity.
Orientation align_on_circuit(const BipartiteGraph &fixed_graph, const Orientation &fixed,
                             const std::array<Edge, 4> &fixed_circuit, const BipartiteGraph &moving_graph,
                             const Orientation &moving, const std::array<Edge, 4> &moving_circuit);

// Aligns the second and third piece orientations to the first on the circuit,
// takes their union and drops the circuit edges missing from `graph`.
Orientation splice_trisum(const BipartiteGraph &graph, const TrisumSplit &split,
                          const std::array<Orientation, 3> &pieces);

// Orientation of the split graph from orientations of its two pieces.
// Edges inside X + Y1 + {u2} follow the first piece, edges inside the
// complement follow the second, and an edge (z, y) across takes the product
// of the signs of (u1, y) in the first piece and (z, u2) in the second.
// With `check_matchings` > 0 the result is compared against every perfect
// matching when there are at most that many; a failure throws logic_error.
Orientation splice_two_sum(const BipartiteGraph &graph, const TwoSumSplit &split, const Orientation &first,
                           const Orientation &second, long long check_matchings = 1'000'000);

// Re-expresses a tree built on a subgraph in the parent's indices.
DecompositionTree remap(DecompositionTree tree, const std::vector<int> &a_map, const std::vector<int> &b_map);

}  // namespace pfaffian
