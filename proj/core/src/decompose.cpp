#include "pfaffian/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pfaffian/errors.hpp"
#include "pfaffian/matching.hpp"
#include "pfaffian/scc.hpp"

namespace pfaffian {

namespace {

std::vector<int> inverse(const std::vector<int> &map, int size) {
    std::vector<int> inv(size, -1);
    for (int i = 0; i < static_cast<int>(map.size()); ++i) inv[map[i]] = i;
    return inv;
}

MappedGraph with_extra_edges(MappedGraph m, const std::vector<Edge> &extra) {
    if (extra.empty()) return m;
    std::vector<Edge> edges = m.graph.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    m.graph = BipartiteGraph(m.graph.n_a(), m.graph.n_b(), std::move(edges));
    return m;
}

Matching restrict_matching(const Matching &pm, const MappedGraph &piece, int parent_a, int parent_b) {
    std::vector<int> local_a = inverse(piece.a_map, parent_a);
    std::vector<int> local_b = inverse(piece.b_map, parent_b);
    std::vector<Edge> edges;
    for (const Edge &e : pm.edges()) {
        if (local_a[e.a] >= 0 && local_b[e.b] >= 0) edges.push_back({local_a[e.a], local_b[e.b]});
    }
    return Matching(std::move(edges));
}

// One split along e, taking X to be a sink component of D(H - u1 - u2).
std::optional<TwoSumSplit> split_once(const BipartiteGraph &h, const Matching &pm, const Edge &e) {
    const int u1 = e.a;
    const int u2 = e.b;
    std::vector<int> mate = pm.mate_of_a(h.n_a());
    std::vector<int> owner = pm.mate_of_b(h.n_b());

    std::vector<std::vector<int>> successors(h.n_a());
    for (const Edge &f : h.edges()) {
        if (f.a == u1 || f.b == u2 || mate[f.a] == f.b) continue;
        successors[f.a].push_back(owner[f.b]);
    }
    SccResult scc = strongly_connected_components(successors);
    if (scc.count <= 2) return std::nullopt;  // u1 alone plus at most one more

    std::vector<bool> is_sink(scc.count, true);
    for (int v = 0; v < h.n_a(); ++v)
        for (int w : successors[v])
            if (scc.component[v] != scc.component[w]) is_sink[scc.component[v]] = false;
    int chosen = -1;
    for (int v = 0; v < h.n_a() && chosen < 0; ++v)
        if (v != u1 && is_sink[scc.component[v]]) chosen = scc.component[v];

    std::vector<bool> in_x(h.n_a(), false), in_y1(h.n_b(), false);
    TwoSumSplit split;
    split.e = e;
    for (int v = 0; v < h.n_a(); ++v) {
        if (v != u1 && scc.component[v] == chosen) {
            in_x[v] = true;
            in_y1[mate[v]] = true;
            split.x.push_back(v);
        }
    }
    auto in_y2 = [&](int a) { return a != u1 && !in_x[a]; };

    // First piece: X + Y1 + {u1, u2}; u1 joins the Y1 vertices seen from Y2.
    std::vector<bool> keep_a = in_x, keep_b = in_y1;
    keep_a[u1] = true;
    keep_b[u2] = true;
    MappedGraph first = induced_subgraph(h, keep_a, keep_b);
    {
        std::vector<int> la = inverse(first.a_map, h.n_a());
        std::vector<int> lb = inverse(first.b_map, h.n_b());
        for (int y = 0; y < h.n_b(); ++y) {
            if (!in_y1[y] || h.has_edge(u1, y)) continue;
            auto nbrs = h.b_neighbors(y);
            if (std::any_of(nbrs.begin(), nbrs.end(), in_y2)) split.first_added.push_back({la[u1], lb[y]});
        }
    }
    split.first = with_extra_edges(std::move(first), split.first_added);

    // Second piece: everything outside X + Y1; u2 joins the Y2 vertices seen from Y1.
    for (int v = 0; v < h.n_a(); ++v) keep_a[v] = !in_x[v];
    for (int v = 0; v < h.n_b(); ++v) keep_b[v] = !in_y1[v];
    MappedGraph second = induced_subgraph(h, keep_a, keep_b);
    {
        std::vector<int> la = inverse(second.a_map, h.n_a());
        std::vector<int> lb = inverse(second.b_map, h.n_b());
        for (int z = 0; z < h.n_a(); ++z) {
            if (!in_y2(z) || h.has_edge(z, u2)) continue;
            auto nbrs = h.a_neighbors(z);
            if (std::any_of(nbrs.begin(), nbrs.end(), [&](int b) { return in_y1[b]; }))
                split.second_added.push_back({la[z], lb[u2]});
        }
    }
    split.second = with_extra_edges(std::move(second), split.second_added);

    split.first_matching = restrict_matching(pm, split.first, h.n_a(), h.n_b());
    split.second_matching = restrict_matching(pm, split.second, h.n_a(), h.n_b());
    return split;
}

void require_matching_covered(const BipartiteGraph &graph, const Matching &pm) {
    if (!pm.is_perfect_in(graph)) throw PreconditionError("matching is not perfect in the graph");
    if (!is_connected(graph)) throw PreconditionError("graph is disconnected");
    if (!is_k_extendable(graph, 1)) throw PreconditionError("graph is not 1-extendable");
}

Edge local_edge(const MappedGraph &piece, const Edge &parent_edge, int parent_a, int parent_b) {
    return {inverse(piece.a_map, parent_a)[parent_edge.a], inverse(piece.b_map, parent_b)[parent_edge.b]};
}

BraceDecomposition build(MappedGraph piece, Matching pm, int threshold) {
    const BipartiteGraph &g = piece.graph;
    std::vector<int> order(g.n_a());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return piece.a_map[x] < piece.a_map[y]; });
    std::stable_partition(order.begin(), order.end(), [&](int a) { return piece.a_map[a] >= threshold; });

    std::vector<int> mate = pm.mate_of_a(g.n_a());
    for (int a : order) {
        auto split = split_once(g, pm, Edge{a, mate[a]});
        if (!split) continue;
        BraceDecomposition node;
        auto compose = [&](const MappedGraph &child) {
            MappedGraph m{child.graph, {}, {}};
            for (int x : child.a_map) m.a_map.push_back(piece.a_map[x]);
            for (int x : child.b_map) m.b_map.push_back(piece.b_map[x]);
            return m;
        };
        int original = piece.a_map[a];
        node.children.push_back(build(compose(split->first), split->first_matching, original + 1));
        node.children.push_back(build(compose(split->second), split->second_matching, original));
        node.split = std::move(split);
        node.piece = std::move(piece);
        node.matching = std::move(pm);
        return node;
    }
    if (!is_brace(g)) throw std::logic_error("no reducing matching edge in a non-brace");
    BraceDecomposition leaf;
    leaf.piece = std::move(piece);
    leaf.matching = std::move(pm);
    return leaf;
}

}  // namespace

std::vector<TwoSumSplit> reducing_edge_splits(const BipartiteGraph &graph, const Matching &pm, const Edge &e) {
    require_matching_covered(graph, pm);
    if (!pm.contains(e)) throw PreconditionError("edge is not in the matching");

    std::vector<TwoSumSplit> chain;
    BipartiteGraph current = graph;
    Matching current_pm = pm;
    Edge current_e = e;
    while (auto split = split_once(current, current_pm, current_e)) {
        Edge next_e = local_edge(split->second, current_e, current.n_a(), current.n_b());
        current = split->second.graph;
        current_pm = split->second_matching;
        current_e = next_e;
        chain.push_back(std::move(*split));
    }
    return chain;
}

std::vector<const BraceDecomposition *> BraceDecomposition::leaves() const {
    if (is_leaf()) return {this};
    std::vector<const BraceDecomposition *> out;
    for (const auto &child : children) {
        auto sub = child.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

BraceDecomposition decompose_into_braces(const BipartiteGraph &graph, const Matching &pm) {
    require_matching_covered(graph, pm);
    MappedGraph whole{graph, std::vector<int>(graph.n_a()), std::vector<int>(graph.n_b())};
    std::iota(whole.a_map.begin(), whole.a_map.end(), 0);
    std::iota(whole.b_map.begin(), whole.b_map.end(), 0);
    return build(std::move(whole), pm, 0);
}

namespace {

// Components of the graph minus x, as unified-id labels (-1 on x). Returns the count.
int label_components(const BipartiteGraph &graph, const Trisector &x, std::vector<int> &label) {
    label.assign(graph.vertex_count(), -2);
    for (int a : x.a) label[a] = -1;
    for (int b : x.b) label[graph.unified_b(b)] = -1;
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < graph.vertex_count(); ++s) {
        if (label[s] != -2) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (graph.is_a(v)) {
                for (int b : graph.a_neighbors(v)) {
                    int w = graph.unified_b(b);
                    if (label[w] == -2) {
                        label[w] = count;
                        stack.push_back(w);
                    }
                }
            } else {
                for (int w : graph.b_neighbors(v - graph.n_a())) {
                    if (label[w] == -2) {
                        label[w] = count;
                        stack.push_back(w);
                    }
                }
            }
        }
        ++count;
    }
    return count;
}

bool valid_four_set(const BipartiteGraph &graph, const Trisector &x) {
    return 0 <= x.a[0] && x.a[0] < x.a[1] && x.a[1] < graph.n_a() && 0 <= x.b[0] && x.b[0] < x.b[1] &&
           x.b[1] < graph.n_b();
}

}  // namespace

int components_without(const BipartiteGraph &graph, const Trisector &x) {
    if (!valid_four_set(graph, x)) throw PreconditionError("not two distinct vertices per side");
    std::vector<int> label;
    return label_components(graph, x, label);
}

namespace {

// For every vertex v not in `removed`: the number of components of the graph
// minus `removed` minus v. One low-link pass over the remaining graph.
void components_after_removal(const std::vector<std::vector<int>> &adj, const std::vector<bool> &removed,
                              std::vector<int> &after) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), split(n, 0), next(n, 0);
    std::vector<int> roots, stack;
    int time = 0;
    for (int r = 0; r < n; ++r) {
        if (removed[r] || disc[r] >= 0) continue;
        roots.push_back(r);
        disc[r] = low[r] = time++;
        stack.push_back(r);
        while (!stack.empty()) {
            int v = stack.back();
            if (next[v] < static_cast<int>(adj[v].size())) {
                int w = adj[v][next[v]++];
                if (removed[w]) continue;
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = time++;
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) ++split[p];
            }
        }
    }
    const int count = static_cast<int>(roots.size());
    after.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        int pieces = split[v] + (parent[v] >= 0 ? 1 : 0);
        after[v] = count - 1 + pieces;
    }
}

}  // namespace

std::vector<Trisector> enumerate_trisectors(const BipartiteGraph &graph) {
    if (!is_connected(graph) || !has_perfect_matching(graph) || !is_brace(graph)) {
        throw PreconditionError("graph is not a brace");
    }
    std::vector<std::vector<int>> adj(graph.vertex_count());
    for (int v = 0; v < graph.vertex_count(); ++v) adj[v] = graph.unified_neighbors(v);
    std::vector<Trisector> out;
    std::vector<bool> removed(graph.vertex_count(), false);
    std::vector<int> after;
    for (int a0 = 0; a0 < graph.n_a(); ++a0)
        for (int a1 = a0 + 1; a1 < graph.n_a(); ++a1)
            for (int b0 = 0; b0 + 1 < graph.n_b(); ++b0) {
                removed[a0] = removed[a1] = removed[graph.unified_b(b0)] = true;
                components_after_removal(adj, removed, after);
                removed[a0] = removed[a1] = removed[graph.unified_b(b0)] = false;
                for (int b1 = b0 + 1; b1 < graph.n_b(); ++b1)
                    if (after[graph.unified_b(b1)] >= 3) out.push_back(Trisector{{a0, a1}, {b0, b1}});
            }
    return out;
}

TrisumSplit trisum_split(const BipartiteGraph &graph, const Trisector &x) {
    if (!valid_four_set(graph, x)) throw PreconditionError("not two distinct vertices per side");
    std::vector<int> label;
    const int count = label_components(graph, x, label);
    if (count < 3) throw PreconditionError("not a trisector");

    // Labels are assigned in order of the smallest unified id already.
    std::vector<int> size(count, 0);
    for (int l : label)
        if (l >= 0) ++size[l];
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return size[p] < size[q]; });
    std::vector<int> group(count);
    for (int k = 0; k < count; ++k) group[order[k]] = std::min(k, 2);

    TrisumSplit split;
    split.x = x;
    split.circuit = {Edge{x.a[0], x.b[0]}, Edge{x.a[1], x.b[0]}, Edge{x.a[1], x.b[1]}, Edge{x.a[0], x.b[1]}};
    for (const Edge &c : split.circuit)
        if (!graph.has_edge(c.a, c.b)) split.deleted_circuit_edges.push_back(c);

    for (int piece = 0; piece < 3; ++piece) {
        std::vector<bool> keep_a(graph.n_a()), keep_b(graph.n_b());
        for (int a = 0; a < graph.n_a(); ++a) keep_a[a] = label[a] == -1 || (label[a] >= 0 && group[label[a]] == piece);
        for (int b = 0; b < graph.n_b(); ++b) {
            int l = label[graph.unified_b(b)];
            keep_b[b] = l == -1 || (l >= 0 && group[l] == piece);
        }
        MappedGraph m = induced_subgraph(graph, keep_a, keep_b);
        std::vector<int> la = inverse(m.a_map, graph.n_a());
        std::vector<int> lb = inverse(m.b_map, graph.n_b());
        std::vector<Edge> extra;
        for (const Edge &c : split.deleted_circuit_edges) extra.push_back({la[c.a], lb[c.b]});
        split.pieces[piece] = with_extra_edges(std::move(m), extra);
    }
    return split;
}

DecompositionTree tree_of(const BraceDecomposition &decomposition) {
    DecompositionTree node;
    const MappedGraph &piece = decomposition.piece;
    node.a_vertices = piece.a_map;
    node.b_vertices = piece.b_map;
    std::sort(node.a_vertices.begin(), node.a_vertices.end());
    std::sort(node.b_vertices.begin(), node.b_vertices.end());
    node.edge_count = piece.graph.edge_count();
    if (decomposition.is_leaf()) {
        node.kind = NodeKind::Leaf;
        node.leaf = LeafKind::Brace;
        return node;
    }
    node.kind = NodeKind::TwoSum;
    const Edge &e = decomposition.split->e;
    node.sum_edge = Edge{piece.a_map[e.a], piece.b_map[e.b]};
    for (const auto &child : decomposition.children) node.children.push_back(tree_of(child));
    return node;
}

const char *to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::Pruned: return "pruned";
    case NodeKind::Components: return "components";
    case NodeKind::TwoSum: return "two-sum";
    case NodeKind::Trisum: return "trisum";
    case NodeKind::Leaf: return "leaf";
    }
    return "?";
}

const char *to_string(LeafKind kind) {
    switch (kind) {
    case LeafKind::Brace: return "brace";
    case LeafKind::Planar: return "planar";
    case LeafKind::Heawood: return "heawood";
    case LeafKind::NoPerfectMatching: return "no-perfect-matching";
    case LeafKind::Rejected: return "rejected";
    }
    return "?";
}

const char *to_string(RejectReason reason) {
    switch (reason) {
    case RejectReason::None: return "none";
    case RejectReason::TooManyTrisectors: return "brace has more than n-5 trisectors";
    case RejectReason::NonplanarNonHeawoodNoTrisector: return "nonplanar brace, not Heawood, no trisectors";
    case RejectReason::EdgeBoundExceeded: return "brace has more than 2n-4 edges";
    }
    return "?";
}

}  // namespace pfaffian
