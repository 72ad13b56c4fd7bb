#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "pfaffian/errors.hpp"
#include "pfaffian/matching.hpp"
#include "pfaffian/oracle.hpp"

namespace pfaffian {
namespace {

using namespace testing;
using oracle::BigInt;

BigInt permutation_permanent(const ZeroOneMatrix &m) {
    std::vector<int> p(m.order());
    std::iota(p.begin(), p.end(), 0);
    BigInt total = 0;
    do {
        int prod = 1;
        for (int r = 0; r < m.order() && prod; ++r) prod *= m(r, p[r]);
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

BigInt permutation_determinant(const SignMatrix &m) {
    std::vector<int> p(m.order());
    std::iota(p.begin(), p.end(), 0);
    BigInt total = 0;
    do {
        int prod = 1;
        for (int r = 0; r < m.order() && prod; ++r) prod *= m(r, p[r]);
        int inversions = 0;
        for (int i = 0; i < m.order(); ++i)
            for (int j = i + 1; j < m.order(); ++j)
                if (p[i] > p[j]) ++inversions;
        total += inversions % 2 ? -prod : prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

ZeroOneMatrix ones(int n) {
    ZeroOneMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, 1);
    return m;
}

ZeroOneMatrix identity(int n) {
    ZeroOneMatrix m(n);
    for (int r = 0; r < n; ++r) m.set(r, r, 1);
    return m;
}

TEST(Permanent, SmallValues) {
    EXPECT_EQ(oracle::permanent(ones(3)), 6);
    EXPECT_EQ(oracle::permanent(ones(10)), 3628800);
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(oracle::permanent(identity(n)), 1);
    EXPECT_EQ(oracle::permanent(matrix_of_graph(heawood_graph())),
              permutation_permanent(matrix_of_graph(heawood_graph())));
    EXPECT_EQ(oracle::permanent(matrix_of_graph(heawood_graph())), 24);
}

TEST(Permanent, AgreesWithPermutationSum) {
    Rng rng(7);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 210; ++t) {
        int n = 1 + t % 7;
        ZeroOneMatrix m(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.set(r, c, coin(rng));
        EXPECT_EQ(oracle::permanent(m), permutation_permanent(m));
        EXPECT_EQ(oracle::permanent(m) == 0, !has_perfect_matching(graph_of_matrix(m)));
    }
}

TEST(Permanent, LargeValuesAreExact) {
    // per(J_20) = 20! exceeds 64 bits.
    BigInt factorial = 1;
    for (int k = 2; k <= 20; ++k) factorial *= k;
    EXPECT_EQ(oracle::permanent(ones(20)), factorial);
}

TEST(Permanent, SizeLimit) { EXPECT_THROW(oracle::permanent(ones(5), 4), SizeLimitError); }

TEST(Determinant, SmallValues) {
    EXPECT_EQ(oracle::determinant(SignMatrix({{1, 1}, {1, -1}})), -2);
    SignMatrix id(6);
    for (int r = 0; r < 6; ++r) id.set(r, r, 1);
    EXPECT_EQ(oracle::determinant(id), 1);
    EXPECT_EQ(oracle::determinant(SignMatrix({{1, -1, 1}, {0, 0, 0}, {1, 1, 1}})), 0);
    EXPECT_EQ(oracle::determinant(SignMatrix(0)), 1);
}

TEST(Determinant, AgreesWithPermutationSum) {
    Rng rng(9);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int t = 0; t < 210; ++t) {
        int n = 1 + t % 7;
        SignMatrix m(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.set(r, c, entry(rng));
        EXPECT_EQ(oracle::determinant(m), permutation_determinant(m));
    }
}

TEST(Determinant, LargeOrderUsesBigIntegers) {
    // Upper triangular, diagonal alternating 1, -1.
    SignMatrix m(30);
    for (int r = 0; r < 30; ++r) {
        m.set(r, r, r % 2 ? -1 : 1);
        for (int c = r + 1; c < 30; ++c) m.set(r, c, 1);
    }
    EXPECT_EQ(oracle::determinant(m), -1);
}

Orientation one_reversed_c4() {
    BipartiteGraph g = even_cycle(2);
    Orientation d = Orientation::uniform(g, Direction::AtoB);
    d.set(0, Direction::BtoA);
    return d;
}

TEST(IsPfaffian, SpecExamples) {
    BipartiteGraph c4 = even_cycle(2);
    EXPECT_TRUE(oracle::is_pfaffian_orientation(c4, one_reversed_c4()));
    EXPECT_FALSE(oracle::is_pfaffian_orientation(c4, Orientation::uniform(c4, Direction::AtoB)));
    EXPECT_TRUE(oracle::is_pfaffian_by_definition(c4, one_reversed_c4()));
    EXPECT_FALSE(oracle::is_pfaffian_by_definition(c4, Orientation::uniform(c4, Direction::AtoB)));

    const BipartiteGraph &h = heawood_graph();
    EXPECT_TRUE(oracle::is_pfaffian_orientation(h, Orientation::uniform(h, Direction::AtoB)));
    EXPECT_TRUE(oracle::is_pfaffian_by_definition(h, Orientation::uniform(h, Direction::AtoB)));

    BipartiteGraph p3 = path_graph(3);
    EXPECT_TRUE(oracle::is_pfaffian_orientation(p3, Orientation::uniform(p3, Direction::AtoB)));
}

TEST(IsPfaffian, NoOrientationOfK33Passes) {
    BipartiteGraph k33 = complete_bipartite(3, 3);
    for (int mask = 0; mask < (1 << 9); ++mask) {
        Orientation d = Orientation::uniform(k33, Direction::AtoB);
        for (int i = 0; i < 9; ++i)
            if (mask & (1 << i)) d.set(i, Direction::BtoA);
        ASSERT_FALSE(oracle::is_pfaffian_orientation(k33, d));
    }
}

TEST(IsPfaffian, ThreeRoutesAgree) {
    Rng rng(21);
    int checked = 0;
    while (checked < 300) {
        BipartiteGraph g = random_connected(rng, 4, 4, 0.4);
        if (!has_perfect_matching(g)) continue;
        ++checked;
        Orientation d = random_orientation(g, rng);
        bool by_det = oracle::is_pfaffian_orientation(g, d);
        EXPECT_EQ(by_det, oracle::is_pfaffian_by_definition(g, d));
        EXPECT_EQ(by_det, *oracle::matching_signs_agree(g, d, 1000000));
    }
}

TEST(PerfectMatchings, Counts) {
    EXPECT_EQ(oracle::enumerate_perfect_matchings(even_cycle(2)).size(), 2u);
    EXPECT_EQ(oracle::enumerate_perfect_matchings(complete_bipartite(3, 3)).size(), 6u);
    EXPECT_EQ(oracle::enumerate_perfect_matchings(even_cycle(3)).size(), 2u);
    EXPECT_EQ(oracle::enumerate_perfect_matchings(path_graph(3)).size(), 0u);
    oracle::Limits tight;
    tight.matchings = 5;
    EXPECT_THROW(oracle::enumerate_perfect_matchings(complete_bipartite(3, 3), tight), SizeLimitError);
    EXPECT_EQ(oracle::matching_signs_agree(even_cycle(2), one_reversed_c4(), 1), std::nullopt);
    EXPECT_EQ(oracle::matching_signs_agree(even_cycle(2), one_reversed_c4(), 2), true);
    // A disagreement found before the limit is conclusive.
    EXPECT_EQ(oracle::matching_signs_agree(complete_bipartite(3, 3),
                                           Orientation::uniform(complete_bipartite(3, 3), Direction::AtoB), 5),
              false);
}

TEST(Bruteforce, SpecExamples) {
    EXPECT_FALSE(oracle::pfaffian_exists_bruteforce(complete_bipartite(3, 3)).has_value());
    auto c4 = oracle::pfaffian_exists_bruteforce(even_cycle(2));
    ASSERT_TRUE(c4.has_value());
    EXPECT_TRUE(oracle::is_pfaffian_orientation(even_cycle(2), *c4));
    auto h = oracle::pfaffian_exists_bruteforce(heawood_graph());
    ASSERT_TRUE(h.has_value());
    EXPECT_TRUE(oracle::is_pfaffian_orientation(heawood_graph(), *h));
    EXPECT_EQ(oracle::cyclomatic_number(heawood_graph()), 8);
    oracle::Limits tight;
    tight.cyclomatic = 3;
    EXPECT_THROW(oracle::pfaffian_exists_bruteforce(complete_bipartite(3, 3), tight), SizeLimitError);
}

TEST(Bruteforce, ForestNormalisationIsLossless) {
    // Any orientation can be flipped to agree with A-to-B on a spanning forest.
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        BipartiteGraph g = random_connected(rng, 5, 4, 0.3);
        Orientation d = random_orientation(g, rng);
        std::vector<int> forest = oracle::spanning_forest_edges(g);
        // Root each tree at its first vertex and flip vertices whose path parity is odd.
        std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
        for (int e : forest) {
            int a = g.edge(e).a, b = g.unified_b(g.edge(e).b);
            adj[a].push_back({b, e});
            adj[b].push_back({a, e});
        }
        std::vector<int> flip(g.vertex_count(), -1);
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (flip[s] >= 0) continue;
            flip[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, e] : adj[v]) {
                    if (flip[w] >= 0) continue;
                    flip[w] = flip[v] ^ (d[e] == Direction::BtoA ? 1 : 0);
                    stack.push_back(w);
                }
            }
        }
        VertexSet s(g);
        for (int a = 0; a < g.n_a(); ++a)
            if (flip[a]) s.insert_a(a);
        for (int b = 0; b < g.n_b(); ++b)
            if (flip[g.unified_b(b)]) s.insert_b(b);
        Orientation f = flip_vertices(g, d, s);
        for (int e : forest) EXPECT_EQ(f[e], Direction::AtoB);
    }
}

TEST(DirectedCircuits, CountsAndParity) {
    EXPECT_EQ(oracle::directed_circuits(complete_digraph(3)).size(), 5u);  // three 2-cycles, two triangles
    EXPECT_EQ(oracle::directed_circuits(directed_cycle(5)).size(), 1u);
    EXPECT_TRUE(oracle::is_even_by_definition(complete_digraph(3)));
    EXPECT_FALSE(oracle::is_even_by_definition(directed_cycle(4)));
    EdgeWeighting w{{1, 0, 0, 0}};
    EXPECT_TRUE(oracle::every_circuit_odd(directed_cycle(4), w));
    EdgeWeighting zero{{0, 0, 0, 0}};
    EXPECT_FALSE(oracle::every_circuit_odd(directed_cycle(4), zero));
}

}  // namespace
}  // namespace pfaffian
