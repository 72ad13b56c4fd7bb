#include "pfaffian/apps.hpp"

#include <queue>
#include <stdexcept>

#include "pfaffian/errors.hpp"
#include "pfaffian/matching.hpp"

namespace pfaffian {

std::optional<SignMatrix> polya_matrix(const ZeroOneMatrix &a, const oracle::Limits &limits) {
    BipartiteGraph graph = graph_of_matrix(a);
    PfaffianVerdict verdict = pfaffian_orientation(graph);
    if (!verdict.yes()) return std::nullopt;

    SignMatrix b = oracle::signed_biadjacency(graph, *verdict.orientation);
    oracle::BigInt det = oracle::determinant(b);
    if (det < 0 && b.order() > 0) {
        for (int c = 0; c < b.order(); ++c) b.set(0, c, -b(0, c));
        det = -det;
    }
    if (a.order() <= limits.matrix_order && det != oracle::permanent(a, limits.matrix_order)) {
        throw std::logic_error("signed matrix determinant differs from the permanent");
    }
    return b;
}

BipartiteGraph graph_of_digraph(const Digraph &digraph) {
    std::vector<Edge> edges;
    for (int v = 0; v < digraph.vertex_count(); ++v) edges.push_back({v, v});
    for (const Arc &arc : digraph.arcs()) edges.push_back({arc.tail, arc.head});
    return BipartiteGraph(digraph.vertex_count(), digraph.vertex_count(), std::move(edges));
}

EvennessVerdict is_even_digraph(const Digraph &digraph) {
    BipartiteGraph graph = graph_of_digraph(digraph);
    PfaffianVerdict verdict = pfaffian_orientation(graph);
    EvennessVerdict result;
    if (!verdict.yes()) {
        result.even = true;
        return result;
    }
    // Flipping b_v reverses only the matching edge a_v b_v among matching edges.
    VertexSet flip(graph);
    for (int v = 0; v < digraph.vertex_count(); ++v) {
        if ((*verdict.orientation)[*graph.edge_index(v, v)] == Direction::BtoA) flip.insert_b(v);
    }
    Orientation d = flip_vertices(graph, *verdict.orientation, flip);
    for (int v = 0; v < digraph.vertex_count(); ++v) {
        if (d[*graph.edge_index(v, v)] != Direction::AtoB) throw std::logic_error("matching edge not normalised");
    }

    EdgeWeighting w;
    for (const Arc &arc : digraph.arcs()) {
        w.weight.push_back(d[*graph.edge_index(arc.tail, arc.head)] == Direction::AtoB ? 1 : 0);
    }
    result.witness = std::move(w);
    return result;
}

bool sign_nonsingular(const SignMatrix &m, const oracle::Limits &limits) {
    ZeroOneMatrix s = support(m);
    BipartiteGraph graph = graph_of_matrix(s);
    if (!has_perfect_matching(graph)) return false;
    if (m.order() <= limits.matrix_order) {
        return oracle::permanent(s, limits.matrix_order) == abs(oracle::determinant(m));
    }

    PfaffianVerdict verdict = pfaffian_orientation(graph);
    if (!verdict.yes()) return false;

    Orientation given = Orientation::uniform(graph, Direction::AtoB);
    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge &e = graph.edge(i);
        if (m(e.a, e.b) < 0) given.set(i, Direction::BtoA);
    }

    // The two must differ exactly on a cut of the graph of edges lying in
    // perfect matchings: 2-colour it so that differing edges join colours.
    BipartiteGraph kept = prune_non_pm_edges(graph, max_matching(graph)).kept;
    std::vector<int> colour(kept.vertex_count(), -1);
    for (int s0 = 0; s0 < kept.vertex_count(); ++s0) {
        if (colour[s0] >= 0) continue;
        colour[s0] = 0;
        std::queue<int> queue;
        queue.push(s0);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : kept.unified_neighbors(v)) {
                int a = kept.is_a(v) ? v : w;
                int b = (kept.is_a(v) ? w : v) - kept.n_a();
                int i = *graph.edge_index(a, b);
                int want = colour[v] ^ (given[i] != (*verdict.orientation)[i] ? 1 : 0);
                if (colour[w] < 0) {
                    colour[w] = want;
                    queue.push(w);
                } else if (colour[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace pfaffian
