#pragma once

#include <optional>

#include "pfaffian/graph.hpp"
#include "pfaffian/oracle.hpp"
#include "pfaffian/orient.hpp"

namespace pfaffian {

// A signing B of `a` with det(B) = per(A), or nullopt if none exists. The
// identity det(B) = per(A) is verified exactly when the order is within
// limits.matrix_order.
std::optional<SignMatrix> polya_matrix(const ZeroOneMatrix &a, const oracle::Limits &limits = {});

// G(D): A-vertex a_v and B-vertex b_v per digraph vertex, the edge a_v b_v for
// every v and the edge a_u b_v for every arc u -> v. D(G(D), M) is D again for
// the matching M of all a_v b_v edges.
BipartiteGraph graph_of_digraph(const Digraph &digraph);

struct EvennessVerdict {
    bool even = false;
    std::optional<EdgeWeighting> witness;  // set when not even
};

// Even when some directed circuit has even weight under every 0/1 weighting.
// Otherwise the witness gives every directed circuit odd weight: with the
// Pfaffian orientation of G(D) flipped so that a_v -> b_v for all v, arc
// u -> v weighs 1 iff a_u -> b_v.
EvennessVerdict is_even_digraph(const Digraph &digraph);

// Every real matrix with this sign pattern is nonsingular. False when the
// support has no perfect matching. Within limits.matrix_order decided by
// per(|M|) = |det(M)|; beyond it by comparing with the pipeline's Pfaffian
// orientation, which is unique up to vertex flips on the edges lying in
// perfect matchings.
bool sign_nonsingular(const SignMatrix &m, const oracle::Limits &limits = {});

}  // namespace pfaffian
