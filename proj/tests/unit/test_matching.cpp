#include <gtest/gtest.h>

#include "generators.hpp"
#include "pfaffian/errors.hpp"
#include "pfaffian/matching.hpp"
#include "pfaffian/oracle.hpp"
#include "pfaffian/scc.hpp"

namespace pfaffian {
namespace {

using namespace testing;

TEST(Scc, SinkComponentFirst) {
    // 0 <-> 1 -> 2 <-> 3
    std::vector<std::vector<int>> g{{1}, {0, 2}, {3}, {2}};
    SccResult r = strongly_connected_components(g);
    EXPECT_EQ(r.count, 2);
    EXPECT_EQ(r.component[2], 0);
    EXPECT_EQ(r.component[3], 0);
    EXPECT_EQ(r.component[0], r.component[1]);
}

TEST(Scc, LongPathDoesNotRecurse) {
    const int n = 200000;
    std::vector<std::vector<int>> g(n);
    for (int v = 0; v + 1 < n; ++v) g[v].push_back(v + 1);
    g[n - 1].push_back(0);
    EXPECT_EQ(strongly_connected_components(g).count, 1);
}

TEST(MaxMatching, KnownSizes) {
    EXPECT_EQ(max_matching(complete_bipartite(3, 3)).size(), 3);
    EXPECT_EQ(max_matching(path_graph(3)).size(), 1);
    EXPECT_EQ(max_matching(path_graph(6)).size(), 3);
    EXPECT_EQ(max_matching(heawood_graph()).size(), 7);
    EXPECT_FALSE(has_perfect_matching(path_graph(3)));
    EXPECT_TRUE(has_perfect_matching(grid(2, 3)));
    EXPECT_FALSE(has_perfect_matching(BipartiteGraph(2, 2, {{0, 0}, {1, 0}})));
}

TEST(MaxMatching, AgreesWithPermanentOnRandomGraphs) {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        BipartiteGraph g = random_connected(rng, 5, 5, 0.15);
        bool pm = has_perfect_matching(g);
        EXPECT_EQ(pm, oracle::permanent(matrix_of_graph(g)) != 0);
        Matching m = max_matching(g);
        EXPECT_TRUE(m.is_matching_in(g));
    }
}

TEST(DigraphOf, HeawoodGivesFourteenArcs) {
    const BipartiteGraph &h = heawood_graph();
    DigraphImage img = digraph_of(h, max_matching(h));
    EXPECT_EQ(img.digraph.vertex_count(), 7);
    EXPECT_EQ(img.digraph.arc_count(), 14);
    for (int i = 0; i < img.digraph.arc_count(); ++i) {
        const Arc &arc = img.digraph.arc(i);
        EXPECT_EQ(h.edge(img.arc_edge[i]), (Edge{arc.tail, img.vertex_b[arc.head]}));
    }
}

TEST(DigraphOf, RejectsNonPerfectMatching) {
    EXPECT_THROW(digraph_of(even_cycle(2), Matching({{0, 0}})), PreconditionError);
}

TEST(Prune, RemovesEdgesInNoPerfectMatching) {
    // C4 plus a pendant square attached through a bridge-like edge:
    // a0-b0, a0-b1, a1-b0, a1-b1 form C4; a2-b2 is forced; a2-b1 lies in no PM.
    BipartiteGraph g(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
    PruneResult r = prune_non_pm_edges(g, max_matching(g));
    EXPECT_EQ(r.removed, (std::vector<Edge>{{2, 1}}));
    EXPECT_EQ(r.kept.edge_count(), 5);
    EXPECT_TRUE(r.witness_pm.is_perfect_in(r.kept));
}

TEST(Prune, MatchesEnumerationOnRandomGraphs) {
    Rng rng(5);
    int checked = 0;
    while (checked < 150) {
        BipartiteGraph g = random_connected(rng, 5, 5, 0.25);
        if (!has_perfect_matching(g)) continue;
        ++checked;
        std::vector<bool> used(g.edge_count(), false);
        for (const Matching &m : oracle::enumerate_perfect_matchings(g))
            for (const Edge &e : m.edges()) used[*g.edge_index(e.a, e.b)] = true;
        PruneResult r = prune_non_pm_edges(g, max_matching(g));
        for (int i = 0; i < g.edge_count(); ++i) EXPECT_EQ(used[i], r.kept.has_edge(g.edge(i).a, g.edge(i).b));
    }
}

TEST(Extendable, SmallCases) {
    EXPECT_TRUE(is_brace(even_cycle(2)));
    EXPECT_TRUE(is_k_extendable(even_cycle(3), 1));
    EXPECT_FALSE(is_brace(even_cycle(3)));
    EXPECT_TRUE(is_brace(complete_bipartite(3, 3)));
    EXPECT_TRUE(is_brace(heawood_graph()));
    EXPECT_TRUE(is_brace(cube()));
    EXPECT_TRUE(is_brace(biwheel(3)));
    EXPECT_TRUE(is_brace(BipartiteGraph(1, 1, {{0, 0}})));
    EXPECT_TRUE(is_k_extendable(grid(2, 3), 1));
    EXPECT_FALSE(is_k_extendable(path_graph(4), 1));
    EXPECT_THROW(is_k_extendable(path_graph(3), 1), PreconditionError);
    EXPECT_THROW(is_k_extendable(even_cycle(2), 3), PreconditionError);
}

// Definitional 2-extendability: every pair of disjoint edges extends to a perfect matching.
bool two_extendable_by_definition(const BipartiteGraph &g) {
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j) {
            const Edge &e = g.edge(i), &f = g.edge(j);
            if (e.a == f.a || e.b == f.b) continue;
            std::vector<bool> ka(g.n_a(), true), kb(g.n_b(), true);
            ka[e.a] = ka[f.a] = false;
            kb[e.b] = kb[f.b] = false;
            if (!has_perfect_matching(induced_subgraph(g, ka, kb).graph)) return false;
        }
    return true;
}

TEST(Extendable, BraceAgreesWithDefinition) {
    Rng rng(3);
    int checked = 0;
    while (checked < 150) {
        BipartiteGraph g = random_connected(rng, 5, 5, 0.45);
        if (!has_perfect_matching(g) || !is_k_extendable(g, 1)) continue;
        ++checked;
        EXPECT_EQ(is_brace(g), two_extendable_by_definition(g));
    }
}

}  // namespace
}  // namespace pfaffian
