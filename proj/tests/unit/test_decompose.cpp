#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "pfaffian/decompose.hpp"
#include "pfaffian/errors.hpp"
#include "pfaffian/matching.hpp"

namespace pfaffian {
namespace {

using namespace testing;

std::vector<int> leaf_sizes(const BraceDecomposition &d) {
    std::vector<int> sizes;
    for (const auto *leaf : d.leaves()) sizes.push_back(leaf->piece.graph.vertex_count());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

void expect_well_formed(const BipartiteGraph &g, const BraceDecomposition &d) {
    auto leaves = d.leaves();
    int total = 0;
    for (const auto *leaf : leaves) {
        EXPECT_TRUE(is_brace(leaf->piece.graph));
        EXPECT_TRUE(leaf->matching.is_perfect_in(leaf->piece.graph));
        total += leaf->piece.graph.vertex_count();
    }
    // Each 2-sum shares the two ends of its edge.
    EXPECT_EQ(total, g.vertex_count() + 2 * (static_cast<int>(leaves.size()) - 1));
}

// Components after deleting four vertices, by a separate flood fill.
int count_components(const BipartiteGraph &g, const Trisector &x) {
    std::vector<bool> gone_a(g.n_a(), false), gone_b(g.n_b(), false);
    for (int a : x.a) gone_a[a] = true;
    for (int b : x.b) gone_b[b] = true;
    std::vector<int> parent(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge &e : g.edges())
        if (!gone_a[e.a] && !gone_b[e.b]) parent[find(e.a)] = find(g.unified_b(e.b));
    int count = 0;
    for (int a = 0; a < g.n_a(); ++a)
        if (!gone_a[a] && find(a) == a) ++count;
    for (int b = 0; b < g.n_b(); ++b)
        if (!gone_b[b] && find(g.unified_b(b)) == g.unified_b(b)) ++count;
    return count;
}

std::vector<Trisector> trisectors_by_definition(const BipartiteGraph &g) {
    std::vector<Trisector> out;
    for (int a0 = 0; a0 < g.n_a(); ++a0)
        for (int a1 = a0 + 1; a1 < g.n_a(); ++a1)
            for (int b0 = 0; b0 < g.n_b(); ++b0)
                for (int b1 = b0 + 1; b1 < g.n_b(); ++b1) {
                    Trisector x{{a0, a1}, {b0, b1}};
                    if (count_components(g, x) >= 3) out.push_back(x);
                }
    return out;
}

TEST(TwoSum, BraceHasNoReducingEdge) {
    BipartiteGraph c4 = even_cycle(2);
    Matching pm = max_matching(c4);
    for (const Edge &e : pm.edges()) EXPECT_TRUE(reducing_edge_splits(c4, pm, e).empty());
    BraceDecomposition d = decompose_into_braces(c4, pm);
    EXPECT_TRUE(d.is_leaf());
}

TEST(TwoSum, HexagonIsTwoSquares) {
    BipartiteGraph c6 = even_cycle(3);
    BraceDecomposition d = decompose_into_braces(c6, max_matching(c6));
    EXPECT_EQ(leaf_sizes(d), (std::vector<int>{4, 4}));
    expect_well_formed(c6, d);
}

TEST(TwoSum, BookOfSquares) {
    for (int k = 2; k <= 5; ++k) {
        BipartiteGraph g = book_of_squares(k);
        BraceDecomposition d = decompose_into_braces(g, max_matching(g));
        expect_well_formed(g, d);
        EXPECT_EQ(leaf_sizes(d), std::vector<int>(k, 4));
    }
}

TEST(TwoSum, SplitPiecesCoverTheGraph) {
    BipartiteGraph g = even_cycle(5);
    Matching pm = max_matching(g);
    auto splits = reducing_edge_splits(g, pm, pm.edges().front());
    ASSERT_FALSE(splits.empty());
    const TwoSumSplit &s = splits.front();
    EXPECT_EQ(s.first.graph.vertex_count() + s.second.graph.vertex_count(), g.vertex_count() + 2);
    EXPECT_TRUE(s.first_matching.is_perfect_in(s.first.graph));
    EXPECT_TRUE(s.second_matching.is_perfect_in(s.second.graph));
    // Every edge of g lies in a piece, apart from the cut edges.
    for (const auto *piece : {&s.first, &s.second})
        for (const Edge &e : piece->graph.edges()) {
            bool added = std::find(s.first_added.begin(), s.first_added.end(), e) != s.first_added.end();
            if (piece == &s.second)
                added = std::find(s.second_added.begin(), s.second_added.end(), e) != s.second_added.end();
            if (!added) EXPECT_TRUE(g.has_edge(piece->a_map[e.a], piece->b_map[e.b]));
        }
}

TEST(TwoSum, Preconditions) {
    BipartiteGraph c4 = even_cycle(2);
    Matching pm = max_matching(c4);
    EXPECT_THROW(reducing_edge_splits(c4, Matching({{0, 0}}), {0, 0}), PreconditionError);
    Edge outside{0, 0};
    for (const Edge &e : c4.edges())
        if (std::find(pm.edges().begin(), pm.edges().end(), e) == pm.edges().end()) outside = e;
    EXPECT_THROW(reducing_edge_splits(c4, pm, outside), PreconditionError);
    BipartiteGraph p4 = path_graph(4);
    EXPECT_THROW(decompose_into_braces(p4, max_matching(p4)), PreconditionError);
}

TEST(TwoSum, RandomGraphsGiveBraces) {
    Rng rng(8);
    int checked = 0;
    while (checked < 100) {
        BipartiteGraph g = random_connected(rng, 6, 6, 0.3);
        if (!has_perfect_matching(g) || !is_k_extendable(g, 1)) continue;
        ++checked;
        BraceDecomposition d = decompose_into_braces(g, max_matching(g));
        expect_well_formed(g, d);
        DecompositionTree t = tree_of(d);
        int sums = 0, leaves = 0;
        std::vector<const DecompositionTree *> stack{&t};
        while (!stack.empty()) {
            const DecompositionTree *n = stack.back();
            stack.pop_back();
            if (n->kind == NodeKind::TwoSum) ++sums;
            if (n->kind == NodeKind::Leaf) ++leaves;
            for (const auto &c : n->children) stack.push_back(&c);
        }
        EXPECT_EQ(leaves, sums + 1);
        EXPECT_EQ(leaves, static_cast<int>(d.leaves().size()));
    }
}

TEST(TwoSum, BraceListIsIndependentOfLabelling) {
    Rng rng(12);
    int checked = 0;
    while (checked < 60) {
        BipartiteGraph g = random_connected(rng, 6, 6, 0.3);
        if (!has_perfect_matching(g) || !is_k_extendable(g, 1)) continue;
        ++checked;
        auto sizes = leaf_sizes(decompose_into_braces(g, max_matching(g)));
        for (int t = 0; t < 3; ++t) {
            BipartiteGraph h = shuffle(g, rng);
            EXPECT_EQ(leaf_sizes(decompose_into_braces(h, max_matching(h))), sizes);
        }
    }
}

TEST(Trisectors, NoneInSmallBraces) {
    EXPECT_TRUE(enumerate_trisectors(heawood_graph()).empty());
    EXPECT_TRUE(enumerate_trisectors(complete_bipartite(3, 3)).empty());
    EXPECT_TRUE(enumerate_trisectors(cube()).empty());
    EXPECT_TRUE(enumerate_trisectors(even_cycle(2)).empty());
    EXPECT_THROW(enumerate_trisectors(even_cycle(3)), PreconditionError);
}

TEST(Trisectors, AgreeWithDefinitionOnGluedBraces) {
    Rng rng(5);
    const std::array<BipartiteGraph, 4> parts{cube(), biwheel(3), biwheel(4), complete_bipartite(3, 3)};
    std::uniform_int_distribution<int> pick(0, 3);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 40; ++t) {
        BipartiteGraph g =
            glue_trisum(rng, {parts[pick(rng)], parts[pick(rng)], parts[pick(rng)]}, t % 2 == 1);
        if (!is_brace(g)) continue;
        ++checked;
        auto found = enumerate_trisectors(g);
        EXPECT_EQ(found, trisectors_by_definition(g));
        Trisector glued{{0, 1}, {0, 1}};
        EXPECT_NE(std::find(found.begin(), found.end(), glued), found.end());
        for (const Trisector &x : found) EXPECT_EQ(components_without(g, x), count_components(g, x));
    }
    EXPECT_GE(checked, 20);
}

TEST(Trisum, SplitInvariants) {
    Rng rng(6);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 40; ++t) {
        BipartiteGraph g = glue_trisum(rng, {cube(), biwheel(3 + t % 3), cube()}, t % 2 == 0);
        if (!is_brace(g)) continue;
        ++checked;
        Trisector x{{0, 1}, {0, 1}};
        TrisumSplit s = trisum_split(g, x);
        int vertices = 0;
        std::vector<bool> covered(g.edge_count(), false);
        for (const MappedGraph &p : s.pieces) {
            vertices += p.graph.vertex_count();
            EXPECT_EQ(p.a_map[0], 0);
            EXPECT_EQ(p.a_map[1], 1);
            EXPECT_EQ(p.b_map[0], 0);
            EXPECT_EQ(p.b_map[1], 1);
            for (const Edge &c : s.circuit) EXPECT_TRUE(p.graph.has_edge(c.a, c.b));
            for (const Edge &e : p.graph.edges()) {
                auto idx = g.edge_index(p.a_map[e.a], p.b_map[e.b]);
                if (idx) covered[*idx] = true;
            }
        }
        EXPECT_EQ(vertices, g.vertex_count() + 8);
        EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
        for (const Edge &e : s.deleted_circuit_edges) EXPECT_FALSE(g.has_edge(e.a, e.b));
        int present = 0;
        for (const Edge &c : s.circuit) present += g.has_edge(c.a, c.b);
        EXPECT_EQ(present + static_cast<int>(s.deleted_circuit_edges.size()), 4);
        // Smaller pieces come first.
        EXPECT_LE(s.pieces[0].graph.vertex_count(), s.pieces[1].graph.vertex_count());
    }
    EXPECT_GE(checked, 20);
}

TEST(Trisum, RejectsNonTrisector) {
    BipartiteGraph g = cube();
    EXPECT_THROW(trisum_split(g, Trisector{{0, 1}, {0, 1}}), PreconditionError);
}

}  // namespace
}  // namespace pfaffian
