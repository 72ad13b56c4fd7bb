#include "pfaffian/orient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pfaffian/errors.hpp"
#include "pfaffian/matching.hpp"
#include "pfaffian/oracle.hpp"
#include "pfaffian/planar.hpp"

namespace pfaffian {

namespace {

std::vector<int> identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> inverse(const std::vector<int> &map, int size) {
    std::vector<int> inv(size, -1);
    for (int i = 0; i < static_cast<int>(map.size()); ++i) inv[map[i]] = i;
    return inv;
}

DecompositionTree node_for(const BipartiteGraph &graph, NodeKind kind) {
    DecompositionTree node;
    node.kind = kind;
    node.a_vertices = identity(graph.n_a());
    node.b_vertices = identity(graph.n_b());
    node.edge_count = graph.edge_count();
    return node;
}

PfaffianVerdict reject(DecompositionTree leaf, RejectReason reason) {
    leaf.leaf = LeafKind::Rejected;
    leaf.reason = reason;
    PfaffianVerdict v;
    v.tree = std::move(leaf);
    v.reason = reason;
    return v;
}

PfaffianVerdict accept(Orientation d, DecompositionTree tree) {
    PfaffianVerdict v;
    v.orientation = std::move(d);
    v.tree = std::move(tree);
    return v;
}

// A failed child verdict becomes the parent's verdict, with the path extended.
PfaffianVerdict propagate_failure(DecompositionTree parent, int child_index, const PfaffianVerdict &child) {
    PfaffianVerdict v;
    v.tree = std::move(parent);
    v.reason = child.reason;
    v.failed_path.push_back(child_index);
    v.failed_path.insert(v.failed_path.end(), child.failed_path.begin(), child.failed_path.end());
    return v;
}

// Orientation on a graph whose every edge lies in one of the pieces.
Orientation union_of_pieces(const BipartiteGraph &graph, const std::vector<const MappedGraph *> &pieces,
                            const std::vector<const Orientation *> &orientations) {
    std::vector<std::vector<int>> la, lb;
    for (const MappedGraph *p : pieces) {
        la.push_back(inverse(p->a_map, graph.n_a()));
        lb.push_back(inverse(p->b_map, graph.n_b()));
    }
    Orientation d = Orientation::uniform(graph, Direction::AtoB);
    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge &e = graph.edge(i);
        bool found = false;
        for (std::size_t k = 0; k < pieces.size() && !found; ++k) {
            int a = la[k][e.a], b = lb[k][e.b];
            if (a < 0 || b < 0) continue;
            auto local = pieces[k]->graph.edge_index(a, b);
            if (!local) continue;
            d.set(i, (*orientations[k])[*local]);
            found = true;
        }
        if (!found) throw std::logic_error("edge lies in no piece");
    }
    return d;
}

PfaffianVerdict solve_decomposition(const BraceDecomposition &node, const PipelineOptions &options) {
    const MappedGraph &piece = node.piece;
    if (node.is_leaf()) {
        PfaffianVerdict v = brace_entry(piece.graph);
        v.tree = remap(std::move(v.tree), piece.a_map, piece.b_map);
        return v;
    }
    DecompositionTree tree;
    tree.kind = NodeKind::TwoSum;
    tree.a_vertices = piece.a_map;
    tree.b_vertices = piece.b_map;
    std::sort(tree.a_vertices.begin(), tree.a_vertices.end());
    std::sort(tree.b_vertices.begin(), tree.b_vertices.end());
    tree.edge_count = piece.graph.edge_count();
    const Edge &e = node.split->e;
    tree.sum_edge = Edge{piece.a_map[e.a], piece.b_map[e.b]};

    std::vector<PfaffianVerdict> children;
    for (const auto &child : node.children) children.push_back(solve_decomposition(child, options));
    for (auto &c : children) tree.children.push_back(c.tree);
    for (int k = 0; k < 2; ++k) {
        if (!children[k].yes()) return propagate_failure(std::move(tree), k, children[k]);
    }
    Orientation d = splice_two_sum(piece.graph, *node.split, *children[0].orientation, *children[1].orientation,
                                   options.splice_check_matchings);
    return accept(std::move(d), std::move(tree));
}

}  // namespace

DecompositionTree remap(DecompositionTree tree, const std::vector<int> &a_map, const std::vector<int> &b_map) {
    for (int &a : tree.a_vertices) a = a_map[a];
    for (int &b : tree.b_vertices) b = b_map[b];
    std::sort(tree.a_vertices.begin(), tree.a_vertices.end());
    std::sort(tree.b_vertices.begin(), tree.b_vertices.end());
    for (Edge &e : tree.removed_edges) e = {a_map[e.a], b_map[e.b]};
    std::sort(tree.removed_edges.begin(), tree.removed_edges.end());
    if (tree.sum_edge) tree.sum_edge = Edge{a_map[tree.sum_edge->a], b_map[tree.sum_edge->b]};
    if (tree.trisector) {
        Trisector &x = *tree.trisector;
        x.a = {a_map[x.a[0]], a_map[x.a[1]]};
        x.b = {b_map[x.b[0]], b_map[x.b[1]]};
        std::sort(x.a.begin(), x.a.end());
        std::sort(x.b.begin(), x.b.end());
    }
    for (auto &child : tree.children) child = remap(std::move(child), a_map, b_map);
    return tree;
}

PfaffianVerdict brace_pfaffian(const BipartiteGraph &brace, const std::vector<Trisector> &trisectors) {
    for (const Trisector &x : trisectors) {
        if (components_without(brace, x) < 3) throw PreconditionError("listed set is not a trisector");
    }
    const int n = brace.vertex_count();
    const int count = static_cast<int>(trisectors.size());
    DecompositionTree leaf = node_for(brace, NodeKind::Leaf);
    leaf.trisector_count = count;

    if (count > 0 && count > n - 5) return reject(std::move(leaf), RejectReason::TooManyTrisectors);

    if (count == 0) {
        if (auto embedding = planar_embed(brace)) {
            leaf.leaf = LeafKind::Planar;
            return accept(fkt_orientation(brace, *embedding), std::move(leaf));
        }
        if (is_heawood(brace)) {
            leaf.leaf = LeafKind::Heawood;
            return accept(heawood_orientation(brace), std::move(leaf));
        }
        return reject(std::move(leaf), RejectReason::NonplanarNonHeawoodNoTrisector);
    }

    const Trisector x = *std::min_element(trisectors.begin(), trisectors.end());
    TrisumSplit split = trisum_split(brace, x);
    DecompositionTree tree = node_for(brace, NodeKind::Trisum);
    tree.trisector = x;
    tree.trisector_count = count;

    std::array<PfaffianVerdict, 3> children;
    for (int k = 0; k < 3; ++k) {
        const MappedGraph &piece = split.pieces[k];
        children[k] = brace_pfaffian(piece.graph, enumerate_trisectors(piece.graph));
        tree.children.push_back(remap(children[k].tree, piece.a_map, piece.b_map));
    }
    for (int k = 0; k < 3; ++k) {
        if (!children[k].yes()) return propagate_failure(std::move(tree), k, children[k]);
    }
    Orientation d =
        splice_trisum(brace, split, {*children[0].orientation, *children[1].orientation, *children[2].orientation});
    return accept(std::move(d), std::move(tree));
}

PfaffianVerdict brace_entry(const BipartiteGraph &brace) {
    if (!is_connected(brace) || !has_perfect_matching(brace) || !is_brace(brace)) {
        throw PreconditionError("graph is not a brace");
    }
    const int n = brace.vertex_count();
    if (n >= 3 && brace.edge_count() > 2 * n - 4) {
        return reject(node_for(brace, NodeKind::Leaf), RejectReason::EdgeBoundExceeded);
    }
    return brace_pfaffian(brace, enumerate_trisectors(brace));
}

PfaffianVerdict pfaffian_orientation(const BipartiteGraph &graph, const PipelineOptions &options) {
    Matching pm = max_matching(graph);
    if (!pm.is_perfect_in(graph)) {
        DecompositionTree leaf = node_for(graph, NodeKind::Leaf);
        leaf.leaf = LeafKind::NoPerfectMatching;
        return accept(Orientation::uniform(graph, Direction::AtoB), std::move(leaf));
    }

    PruneResult pruned = prune_non_pm_edges(graph, pm);
    std::vector<MappedGraph> components = connected_components(pruned.kept);

    std::vector<PfaffianVerdict> verdicts;
    for (const MappedGraph &c : components) {
        std::vector<int> la = inverse(c.a_map, graph.n_a());
        std::vector<int> lb = inverse(c.b_map, graph.n_b());
        std::vector<Edge> local_pm;
        for (const Edge &e : pm.edges())
            if (la[e.a] >= 0) local_pm.push_back({la[e.a], lb[e.b]});
        BraceDecomposition decomposition = decompose_into_braces(c.graph, Matching(std::move(local_pm)));
        PfaffianVerdict v = solve_decomposition(decomposition, options);
        v.tree = remap(std::move(v.tree), c.a_map, c.b_map);
        verdicts.push_back(std::move(v));
    }

    DecompositionTree tree;
    std::vector<int> path_prefix;
    if (components.size() == 1) {
        tree = verdicts[0].tree;
    } else {
        tree = node_for(graph, NodeKind::Components);
        tree.edge_count = pruned.kept.edge_count();
        for (const auto &v : verdicts) tree.children.push_back(v.tree);
    }
    if (!pruned.removed.empty()) {
        DecompositionTree root = node_for(graph, NodeKind::Pruned);
        root.removed_edges = pruned.removed;
        root.children.push_back(std::move(tree));
        tree = std::move(root);
        path_prefix.push_back(0);
    }

    for (std::size_t k = 0; k < verdicts.size(); ++k) {
        if (verdicts[k].yes()) continue;
        PfaffianVerdict v;
        v.tree = std::move(tree);
        v.reason = verdicts[k].reason;
        v.failed_path = path_prefix;
        if (components.size() > 1) v.failed_path.push_back(static_cast<int>(k));
        v.failed_path.insert(v.failed_path.end(), verdicts[k].failed_path.begin(), verdicts[k].failed_path.end());
        return v;
    }

    // Pruned edges lie in no perfect matching, so their direction is free.
    Orientation d = Orientation::uniform(graph, Direction::AtoB);
    for (std::size_t k = 0; k < components.size(); ++k) {
        const MappedGraph &c = components[k];
        for (int i = 0; i < c.graph.edge_count(); ++i) {
            const Edge &e = c.graph.edge(i);
            d.set(*graph.edge_index(c.a_map[e.a], c.b_map[e.b]), (*verdicts[k].orientation)[i]);
        }
    }
    return accept(std::move(d), std::move(tree));
}

Orientation align_on_circuit(const BipartiteGraph &fixed_graph, const Orientation &fixed,
                             const std::array<Edge, 4> &fixed_circuit, const BipartiteGraph &moving_graph,
                             const Orientation &moving, const std::array<Edge, 4> &moving_circuit) {
    std::array<Direction, 4> target{};
    std::array<int, 4> moving_index{};
    for (int k = 0; k < 4; ++k) {
        auto fi = fixed_graph.edge_index(fixed_circuit[k].a, fixed_circuit[k].b);
        auto mi = moving_graph.edge_index(moving_circuit[k].a, moving_circuit[k].b);
        if (!fi || !mi) throw PreconditionError("circuit edge missing from a graph");
        target[k] = fixed[*fi];
        moving_index[k] = *mi;
    }
    const int a0 = moving_circuit[0].a, b0 = moving_circuit[0].b;
    const int a1 = moving_circuit[2].a, b1 = moving_circuit[2].b;
    for (int mask = 0; mask < 16; ++mask) {
        VertexSet s(moving_graph);
        if (mask & 1) s.insert_a(a0);
        if (mask & 2) s.insert_a(a1);
        if (mask & 4) s.insert_b(b0);
        if (mask & 8) s.insert_b(b1);
        Orientation candidate = flip_vertices(moving_graph, moving, s);
        bool agree = true;
        for (int k = 0; k < 4 && agree; ++k) agree = candidate[moving_index[k]] == target[k];
        if (agree) return candidate;
    }
    throw PreconditionError("circuit orientations have different parity");
}

Orientation splice_trisum(const BipartiteGraph &graph, const TrisumSplit &split,
                          const std::array<Orientation, 3> &pieces) {
    // The circuit in each piece's own indices.
    std::array<std::array<Edge, 4>, 3> circuits{};
    for (int k = 0; k < 3; ++k) {
        std::vector<int> la = inverse(split.pieces[k].a_map, graph.n_a());
        std::vector<int> lb = inverse(split.pieces[k].b_map, graph.n_b());
        for (int j = 0; j < 4; ++j) circuits[k][j] = {la[split.circuit[j].a], lb[split.circuit[j].b]};
    }
    std::array<Orientation, 3> aligned{pieces[0], {}, {}};
    for (int k = 1; k < 3; ++k) {
        aligned[k] = align_on_circuit(split.pieces[0].graph, pieces[0], circuits[0], split.pieces[k].graph, pieces[k],
                                      circuits[k]);
    }
    return union_of_pieces(graph, {&split.pieces[0], &split.pieces[1], &split.pieces[2]},
                           {&aligned[0], &aligned[1], &aligned[2]});
}

Orientation splice_two_sum(const BipartiteGraph &graph, const TwoSumSplit &split, const Orientation &first,
                           const Orientation &second, long long check_matchings) {
    if (!first.fits(split.first.graph) || !second.fits(split.second.graph)) {
        throw PreconditionError("piece orientation does not fit its piece");
    }
    const int u1 = split.e.a;
    const int u2 = split.e.b;
    std::vector<int> la1 = inverse(split.first.a_map, graph.n_a());
    std::vector<int> lb1 = inverse(split.first.b_map, graph.n_b());
    std::vector<int> la2 = inverse(split.second.a_map, graph.n_a());
    std::vector<int> lb2 = inverse(split.second.b_map, graph.n_b());
    std::vector<bool> in_x(graph.n_a(), false);
    for (int a : split.x) in_x[a] = true;
    // B-side of the first piece, u2 included, is the B-side of the X side.
    auto b_on_x_side = [&](int b) { return lb1[b] >= 0; };

    auto sign_in = [](const MappedGraph &piece, const Orientation &d, int a, int b) {
        auto i = piece.graph.edge_index(a, b);
        if (!i) throw std::logic_error("2-sum piece lacks a contracted edge");
        return d.sign(*i);
    };

    Orientation d = Orientation::uniform(graph, Direction::AtoB);
    for (int i = 0; i < graph.edge_count(); ++i) {
        const Edge &e = graph.edge(i);
        int sign;
        if (in_x[e.a]) {
            sign = sign_in(split.first, first, la1[e.a], lb1[e.b]);
        } else if (!b_on_x_side(e.b)) {
            sign = sign_in(split.second, second, la2[e.a], lb2[e.b]);
        } else {
            sign = sign_in(split.first, first, la1[u1], lb1[e.b]) * sign_in(split.second, second, la2[e.a], lb2[u2]);
        }
        d.set(i, sign > 0 ? Direction::AtoB : Direction::BtoA);
    }

    if (check_matchings > 0) {
        auto agree = oracle::matching_signs_agree(graph, d, check_matchings);
        if (agree && !*agree) throw std::logic_error("2-sum splice is not Pfaffian");
    }
    return d;
}

}  // namespace pfaffian
